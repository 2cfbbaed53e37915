#include "higgsdt/zeta.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "higgsdt/dt_formulas.hpp"
#include "higgsdt/fraction.hpp"

namespace higgsdt {

ZetaData ZetaData::symbolic_data(int genus)
{
    if (genus < 0) {
        throw std::invalid_argument("genus must be nonnegative");
    }
    return ZetaData{genus, true, 0, {}};
}

ZetaData ZetaData::numeric(long q0, std::vector<Complex> weil, long double tol)
{
    if (q0 < 2) {
        throw std::invalid_argument("q0 must be a prime power >= 2");
    }
    const long double root = std::sqrt(static_cast<long double>(q0));
    std::vector<bool> used(weil.size(), false);
    for (std::size_t i = 0; i < weil.size(); ++i) {
        if (std::abs(std::abs(weil[i]) - root) > tol) {
            throw std::invalid_argument("Weil number " + std::to_string(i + 1) + " does not have absolute value sqrt(q0)");
        }
    }
    if (weil.size() % 2 != 0) {
        throw std::invalid_argument("Weil numbers come in pairs (a, q0/a)");
    }
    // pair every a with some q0 / a; representatives first, partners after
    std::vector<Complex> reps;
    std::vector<Complex> partners;
    for (std::size_t i = 0; i < weil.size(); ++i) {
        if (used[i]) {
            continue;
        }
        const Complex partner = static_cast<long double>(q0) / weil[i];
        bool found = false;
        for (std::size_t j = 0; j < weil.size(); ++j) {
            if (!used[j] && j != i && std::abs(weil[j] - partner) <= tol) {
                used[i] = used[j] = true;
                reps.push_back(weil[i]);
                partners.push_back(weil[j]);
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::invalid_argument("Weil numbers are not closed under a -> q0/a");
        }
    }
    const int genus = static_cast<int>(reps.size());
    reps.insert(reps.end(), partners.begin(), partners.end());
    return ZetaData{genus, false, q0, std::move(reps)};
}

ZetaData ZetaData::from_trace(long q0, long trace)
{
    if (q0 < 2) {
        throw std::invalid_argument("q0 must be a prime power >= 2");
    }
    if (trace * trace > 4 * q0) {
        throw std::invalid_argument("trace " + std::to_string(trace) + " violates the Hasse bound for q0 = " +
                                    std::to_string(q0));
    }
    const long double a = static_cast<long double>(trace);
    const long double im = std::sqrt(static_cast<long double>(4 * q0 - trace * trace)) / 2;
    // genus one: the variable a1 is one root, q0/a1 the conjugate
    return ZetaData{1, false, q0, {Complex(a / 2, im), Complex(a / 2, -im)}};
}

std::vector<LaurentPoly> zx_series(int genus, int order)
{
    const VarTable vars = standard_table(genus);
    const Fraction z = zeta_fraction(vars, genus, Monomial::variable(kVarT));
    std::vector<LaurentPoly> out;
    for (auto& c : z.expand_in(kVarT, order)) {
        out.push_back(c.to_laurent());
    }
    return out;
}

namespace {

void require_numeric(const ZetaData& zd)
{
    if (zd.symbolic) {
        throw std::invalid_argument("numeric Weil numbers required");
    }
}

// Weil variables a_1..a_g take the first g values; the rest are q0/a_i.
std::vector<Complex> variable_values(const ZetaData& zd)
{
    return {zd.weil.begin(), zd.weil.begin() + zd.genus};
}

} // namespace

std::vector<Complex> zx_series(const ZetaData& zd, int order)
{
    require_numeric(zd);
    const auto n = static_cast<std::size_t>(std::max(order, 0)) + 1;
    std::vector<Complex> c(n, 0);
    c[0] = 1;
    const auto q = static_cast<long double>(zd.q0);
    auto times_linear = [&](Complex root) {
        for (std::size_t k = n; k-- > 1;) {
            c[k] -= root * c[k - 1];
        }
    };
    auto over_linear = [&](Complex root) {
        for (std::size_t k = 1; k < n; ++k) {
            c[k] += root * c[k - 1];
        }
    };
    for (const auto& a : variable_values(zd)) {
        times_linear(a);
        times_linear(q / a);
    }
    over_linear(1);
    over_linear(q);
    return c;
}

CountingSequence CountingSequence::adams(int m) const
{
    if (m < 1) {
        throw std::invalid_argument("adams: m must be positive");
    }
    CountingSequence out;
    for (std::size_t k = static_cast<std::size_t>(m); k <= values.size(); k += static_cast<std::size_t>(m)) {
        out.values.push_back(values[k - 1]);
    }
    return out;
}

CountingSequence point_counts(const ZetaData& zd, int n_max)
{
    require_numeric(zd);
    CountingSequence out;
    for (int n = 1; n <= n_max; ++n) {
        const long double qn = std::pow(static_cast<long double>(zd.q0), n);
        Complex v = 1 + qn;
        for (const auto& a : variable_values(zd)) {
            const Complex an = std::pow(a, n);
            v -= an + qn / an;
        }
        out.values.push_back(v);
    }
    return out;
}

namespace {

void require_curve_polynomial(const LaurentPoly& x)
{
    const int g = table_genus(*x.vars());
    for (const auto& [m, c] : x.terms()) {
        for (std::size_t v = 0; v < x.vars()->size(); ++v) {
            if (m[v] != 0 && v != kVarQ && (v < alpha_var(0) || v >= alpha_var(g))) {
                throw std::invalid_argument("polynomial involves " + x.vars()->name(v) +
                                            "; only q and Weil variables are allowed");
            }
        }
    }
}

template <class T>
std::complex<T> evaluate_as(const LaurentPoly& x, T q, const std::vector<Complex>& weil)
{
    std::complex<T> sum = 0;
    for (const auto& [m, c] : x.terms()) {
        std::complex<T> v = static_cast<T>(c.get_d());
        v *= std::pow(q, static_cast<T>(m[kVarQ]));
        for (std::size_t i = 0; i < weil.size(); ++i) {
            const auto e = m[alpha_var(static_cast<int>(i))];
            if (e != 0) {
                v *= std::pow(std::complex<T>(weil[i]), static_cast<T>(e));
            }
        }
        sum += v;
    }
    return sum;
}

} // namespace

CountingSequence counting_sequence(const LaurentPoly& x, const ZetaData& zd, int n_max)
{
    require_numeric(zd);
    require_curve_polynomial(x);
    if (table_genus(*x.vars()) != zd.genus) {
        throw std::invalid_argument("genus of the polynomial and the Weil data differ");
    }
    CountingSequence out;
    const auto base = variable_values(zd);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Complex> w;
        for (const auto& a : base) {
            w.push_back(std::pow(a, n));
        }
        out.values.push_back(evaluate_as<long double>(x, std::pow(static_cast<long double>(zd.q0), n), w));
    }
    return out;
}

long long specialize_integer(const LaurentPoly& x, const ZetaData& zd, long double tol)
{
    require_numeric(zd);
    require_curve_polynomial(x);
    if (table_genus(*x.vars()) != zd.genus) {
        throw std::invalid_argument("genus of the polynomial and the Weil data differ");
    }
    if (!weil_symmetry_check(x)) {
        throw std::domain_error("polynomial is not invariant under the Weyl group");
    }
    const auto w = variable_values(zd);
    auto attempt = [&](auto value) -> std::optional<long long> {
        const long double re = static_cast<long double>(value.real());
        const long double im = static_cast<long double>(value.imag());
        const long double nearest = std::round(re);
        if (std::abs(im) < tol && std::abs(re - nearest) < tol) {
            return static_cast<long long>(nearest);
        }
        return std::nullopt;
    };
    if (auto v = attempt(evaluate_as<double>(x, static_cast<double>(zd.q0), w))) {
        return *v;
    }
    if (auto v = attempt(evaluate_as<long double>(x, static_cast<long double>(zd.q0), w))) {
        return *v;
    }
    throw std::domain_error("specialization residual exceeds the tolerance");
}

} // namespace higgsdt
