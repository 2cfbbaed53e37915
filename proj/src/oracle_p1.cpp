#include "higgsdt/oracle_p1.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>

#include "higgsdt/dt_formulas.hpp"
#include "higgsdt/parallel.hpp"

namespace higgsdt {

namespace {

bool is_prime(int n)
{
    if (n < 2) {
        return false;
    }
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// Monic irreducible modulus, constant term first, for the supported prime powers.
std::vector<int> modulus_for(int q)
{
    switch (q) {
    case 4:
        return {1, 1, 1}; // x^2 + x + 1
    case 8:
        return {1, 1, 0, 1}; // x^3 + x + 1
    case 9:
        return {1, 0, 1}; // x^2 + 1
    default:
        return {0, 1}; // prime field
    }
}

} // namespace

bool FiniteField::supported(int q) noexcept
{
    return (is_prime(q) && q < 64) || q == 4 || q == 8 || q == 9;
}

FiniteField::FiniteField(int q) : q_(q)
{
    if (!supported(q)) {
        throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                                    " (primes below 64 and 4, 8, 9 are supported)");
    }
    p_ = (q == 4 || q == 8) ? 2 : (q == 9 ? 3 : q);
    const std::vector<int> mod = modulus_for(q);
    const std::size_t k = mod.size() - 1;
    auto digits = [&](int a) {
        std::vector<int> d(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int a = 0;
        for (std::size_t i = k; i-- > 0;) {
            a = a * p_ + d[i];
        }
        return a;
    };
    const auto qs = static_cast<std::size_t>(q);
    add_.resize(qs * qs);
    mul_.resize(qs * qs);
    neg_.resize(qs);
    for (int a = 0; a < q; ++a) {
        const auto da = digits(a);
        std::vector<int> n(k);
        for (std::size_t i = 0; i < k; ++i) {
            n[i] = (p_ - da[i]) % p_;
        }
        neg_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(encode(n));
        for (int b = 0; b < q; ++b) {
            const auto db = digits(b);
            std::vector<int> s(k);
            for (std::size_t i = 0; i < k; ++i) {
                s[i] = (da[i] + db[i]) % p_;
            }
            std::vector<int> prod(2 * k, 0);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                }
            }
            // reduce by the monic modulus
            for (std::size_t e = prod.size(); e-- > k;) {
                const int c = prod[e];
                if (c == 0) {
                    continue;
                }
                for (std::size_t j = 0; j <= k; ++j) {
                    prod[e - k + j] = ((prod[e - k + j] - c * mod[j]) % p_ + p_) % p_;
                }
            }
            prod.resize(k);
            const auto idx = static_cast<std::size_t>(a) * qs + static_cast<std::size_t>(b);
            add_[idx] = static_cast<std::uint8_t>(encode(s));
            mul_[idx] = static_cast<std::uint8_t>(encode(prod));
        }
    }
}

std::uint8_t FiniteField::inv(std::uint8_t a) const
{
    for (int b = 1; b < q_; ++b) {
        if (mul(a, static_cast<std::uint8_t>(b)) == 1) {
            return static_cast<std::uint8_t>(b);
        }
    }
    throw std::domain_error("zero has no inverse");
}

int SplittingType::degree() const noexcept
{
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

std::string SplittingType::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        s += (i ? "," : "") + std::to_string(degrees[i]);
    }
    return s + ")";
}

namespace {

void validate_type(const SplittingType& type)
{
    if (type.degrees.empty()) {
        throw std::invalid_argument("splitting type must have rank >= 1");
    }
    for (std::size_t i = 1; i < type.degrees.size(); ++i) {
        if (type.degrees[i] > type.degrees[i - 1]) {
            throw std::invalid_argument("splitting type must be weakly decreasing");
        }
    }
}

Integer power(int base, long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

} // namespace

Integer aut_count(const SplittingType& type, int q)
{
    validate_type(type);
    if (!FiniteField::supported(q)) {
        throw std::invalid_argument("unsupported field order " + std::to_string(q));
    }
    Integer total = 1;
    const auto& a = type.degrees;
    // GL_m blocks for equal degrees
    for (std::size_t i = 0; i < a.size();) {
        std::size_t j = i;
        while (j < a.size() && a[j] == a[i]) {
            ++j;
        }
        const long m = static_cast<long>(j - i);
        for (long k = 0; k < m; ++k) {
            total *= power(q, m) - power(q, k);
        }
        i = j;
    }
    long unipotent = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[i] > a[j]) {
                unipotent += a[i] - a[j] + 1;
            }
        }
    }
    return total * power(q, unipotent);
}

namespace {

using Form = std::vector<std::uint8_t>; // coefficients of a binary form

// Nonzero vectors of F_q^n with first nonzero entry 1.
std::vector<std::vector<std::uint8_t>> projective_points(int q, int n)
{
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> v(static_cast<std::size_t>(n), 0);
    for (int lead = 0; lead < n; ++lead) {
        // v[lead] = 1, v[<lead] = 0, v[>lead] arbitrary
        const int free = n - lead - 1;
        long count = 1;
        for (int i = 0; i < free; ++i) {
            count *= q;
        }
        for (long idx = 0; idx < count; ++idx) {
            std::fill(v.begin(), v.end(), 0);
            v[static_cast<std::size_t>(lead)] = 1;
            long x = idx;
            for (int i = lead + 1; i < n; ++i) {
                v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x % q);
                x /= q;
            }
            out.push_back(v);
        }
    }
    return out;
}

void add_product(const FiniteField& f, Form& acc, const std::uint8_t* a, std::size_t na, const std::uint8_t* b,
                 std::size_t nb, bool negate)
{
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) {
            continue;
        }
        const std::uint8_t ai = negate ? f.neg(a[i]) : a[i];
        for (std::size_t j = 0; j < nb; ++j) {
            acc[i + j] = f.add(acc[i + j], f.mul(ai, b[j]));
        }
    }
}

// A candidate sub-line-sheaf O(m) -> E given by (s1, s2).
struct Section {
    int m;
    Form s1; // empty when a1 - m < 0
    Form s2; // empty when a2 - m < 0
};

class RankTwoScanner {
public:
    RankTwoScanner(const SplittingType& type, int ell, const FiniteField& field) : field_(field)
    {
        const int a1 = type.degrees[0];
        const int a2 = type.degrees[1];
        a_ = {a1, a2};
        const int d = a1 + a2;
        std::size_t offset = 0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                // entry (i, j): O(a_i) -> O(a_j)(l), a form of degree a_j - a_i + l
                const int deg = a_[static_cast<std::size_t>(j)] - a_[static_cast<std::size_t>(i)] + ell;
                const std::size_t len = deg >= 0 ? static_cast<std::size_t>(deg) + 1 : 0;
                entry_offset_[i][j] = offset;
                entry_len_[i][j] = len;
                offset += len;
            }
        }
        dimension_ = offset;
        // m > d/2 and m <= a1
        for (int m = d / 2 + 1; m <= a1; ++m) {
            const int k1 = a1 - m;
            const int k2 = a2 - m;
            const int n1 = k1 + 1;
            const int n2 = k2 >= 0 ? k2 + 1 : 0;
            for (const auto& v : projective_points(field.order(), n1 + n2)) {
                Section s{m, Form(v.begin(), v.begin() + n1), Form(v.begin() + n1, v.end())};
                sections_.push_back(std::move(s));
            }
        }
        ell_ = ell;
    }

    std::size_t dimension() const noexcept { return dimension_; }

    bool semistable(const std::uint8_t* phi) const
    {
        for (const auto& s : sections_) {
            if (invariant(phi, s)) {
                return false;
            }
        }
        return true;
    }

private:
    // (phi s)_j = sum_i phi_ij s_i, a form of degree a_j - m + l
    Form image(const std::uint8_t* phi, const Section& s, int j) const
    {
        const int deg = a_[static_cast<std::size_t>(j)] - s.m + ell_;
        Form out(deg >= 0 ? static_cast<std::size_t>(deg) + 1 : 0, 0);
        const Form* parts[2] = {&s.s1, &s.s2};
        for (int i = 0; i < 2; ++i) {
            const std::size_t len = entry_len_[i][j];
            if (len == 0 || parts[i]->empty()) {
                continue;
            }
            add_product(field_, out, phi + entry_offset_[i][j], len, parts[i]->data(), parts[i]->size(), false);
        }
        return out;
    }

    bool invariant(const std::uint8_t* phi, const Section& s) const
    {
        const Form f1 = image(phi, s, 0);
        const Form f2 = image(phi, s, 1);
        const int deg = a_[0] + a_[1] - 2 * s.m + ell_;
        if (deg < 0) {
            return true;
        }
        Form w(static_cast<std::size_t>(deg) + 1, 0);
        if (!s.s1.empty() && !f2.empty()) {
            add_product(field_, w, s.s1.data(), s.s1.size(), f2.data(), f2.size(), false);
        }
        if (!s.s2.empty() && !f1.empty()) {
            add_product(field_, w, s.s2.data(), s.s2.size(), f1.data(), f1.size(), true);
        }
        for (auto c : w) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    const FiniteField& field_;
    std::array<int, 2> a_{};
    int ell_ = 0;
    std::size_t entry_offset_[2][2]{};
    std::size_t entry_len_[2][2]{};
    std::size_t dimension_ = 0;
    std::vector<Section> sections_;
};

} // namespace

Integer semistable_count(const SplittingType& type, int ell, int q, std::uint64_t cap)
{
    validate_type(type);
    const FiniteField field(q);
    if (type.rank() == 1) {
        return ell >= 0 ? power(q, ell + 1) : Integer(1);
    }
    if (type.rank() != 2) {
        throw std::invalid_argument("semistable_count supports rank <= 2");
    }
    const RankTwoScanner scanner(type, ell, field);
    const std::size_t dim = scanner.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > cap / static_cast<std::uint64_t>(q)) {
            throw std::length_error("Higgs field enumeration for type " + type.to_string() + " exceeds the cap");
        }
        total *= static_cast<std::uint64_t>(q);
    }
    if (total > cap) {
        throw std::length_error("Higgs field enumeration for type " + type.to_string() + " exceeds the cap");
    }
    const std::uint64_t chunk = 1 << 14;
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    std::atomic<std::uint64_t> count{0};
    parallel_for(static_cast<std::size_t>(chunks), [&](std::size_t c) {
        const std::uint64_t begin = c * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        std::vector<std::uint8_t> phi(dim, 0);
        // decode begin in base q, then increment
        std::uint64_t x = begin;
        for (std::size_t i = 0; i < dim; ++i) {
            phi[i] = static_cast<std::uint8_t>(x % static_cast<std::uint64_t>(q));
            x /= static_cast<std::uint64_t>(q);
        }
        std::uint64_t local = 0;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (scanner.semistable(phi.data())) {
                ++local;
            }
            for (std::size_t i = 0; i < dim; ++i) {
                if (++phi[i] < q) {
                    break;
                }
                phi[i] = 0;
            }
        }
        count += local;
    });
    return Integer(static_cast<unsigned long>(count.load()));
}

StackVolume stack_volume_p1(int r, int d, int ell, int q, std::uint64_t cap)
{
    if (r < 1 || r > 2) {
        throw std::invalid_argument("stack_volume_p1 supports rank 1 and 2");
    }
    if (ell < 1) {
        throw std::invalid_argument("stack_volume_p1 needs l >= 1");
    }
    StackVolume out;
    out.spread_bound = (r - 1) * ell;
    auto contribution = [&](const SplittingType& type) {
        const Integer ss = semistable_count(type, ell, q, cap);
        return Rational(ss, aut_count(type, q));
    };
    if (r == 1) {
        SplittingType type{{d}};
        out.volume = contribution(type);
        out.volume.canonicalize();
        out.contributions.emplace_back(type, out.volume);
        return out;
    }
    // a1 - a2 = spread with the parity of d
    auto type_for = [&](int spread) {
        return SplittingType{{(d + spread) / 2, (d - spread) / 2}};
    };
    const int first = ((d % 2) + 2) % 2;
    for (int spread = first; spread <= out.spread_bound; spread += 2) {
        const SplittingType type = type_for(spread);
        Rational c = contribution(type);
        c.canonicalize();
        out.volume += c;
        out.contributions.emplace_back(type, c);
    }
    for (int spread = out.spread_bound + 1; spread <= out.spread_bound + 2; ++spread) {
        if ((spread - first) % 2 != 0) {
            continue;
        }
        if (semistable_count(type_for(spread), ell, q, cap) != 0) {
            out.boundary_vanishes = false;
        }
    }
    out.volume.canonicalize();
    return out;
}

OracleComparison compare_with_formula(int r, int d, int ell, int q, std::uint64_t cap)
{
    if (std::gcd(r, d) != 1) {
        throw std::invalid_argument("oracle comparison needs coprime (r, d)");
    }
    OracleComparison cmp;
    cmp.detail = stack_volume_p1(r, d, ell, q, cap);
    cmp.oracle = cmp.detail.volume;

    const CurveParams cp = CurveParams::twisted(0, ell);
    const LaurentPoly idt = at_t_one(idt_star(cp, r).at(static_cast<std::size_t>(r - 1)));
    std::vector<Rational> point(cp.vars()->size(), Rational(1));
    point[kVarQ] = q;
    const int e2 = ell * r * r + cp.p() * r; // always even at genus 0
    Rational value = idt.evaluate(point);
    value *= Rational(power(q, e2 / 2));
    value /= Rational(q - 1);
    if ((ell * r * r) % 2 != 0) {
        value = -value;
    }
    cmp.formula = value;
    cmp.equal = cmp.formula == cmp.oracle;
    return cmp;
}

} // namespace higgsdt
