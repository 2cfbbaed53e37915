#include "higgsdt/series.hpp"

#include <stdexcept>

namespace higgsdt {

TruncSeries::TruncSeries(VarTable vars, int order) : vars_(std::move(vars))
{
    if (order < 0) {
        throw std::invalid_argument("series order must be nonnegative");
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Fraction(vars_));
}

TruncSeries TruncSeries::one(VarTable vars, int order)
{
    TruncSeries s(vars, order);
    s.coeffs_[0] = Fraction::constant(vars, 1);
    return s;
}

namespace {

void require_compatible(const TruncSeries& a, const TruncSeries& b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("series truncation orders differ");
    }
    if (!same_table(a.vars(), b.vars())) {
        throw std::invalid_argument("variable table mismatch");
    }
}

} // namespace

TruncSeries& TruncSeries::operator+=(const TruncSeries& o)
{
    require_compatible(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o)
{
    require_compatible(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c)
{
    for (auto& f : coeffs_) {
        f *= c;
    }
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    require_compatible(a, b);
    TruncSeries r(a.vars_, a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= a.order(); ++j) {
            if (!b[j].is_zero()) {
                r.coeff(i + j) += a[i] * b[j];
            }
        }
    }
    return r;
}

TruncSeries TruncSeries::adams(int n) const
{
    if (n < 1) {
        throw std::invalid_argument("adams: n must be positive");
    }
    TruncSeries r(vars_, order());
    for (int d = 0; d * n <= order(); ++d) {
        r.coeff(d * n) = coeffs_[static_cast<std::size_t>(d)].adams(n);
    }
    return r;
}

TruncSeries& TruncSeries::reduce()
{
    for (auto& f : coeffs_) {
        f.reduce();
    }
    return *this;
}

bool operator==(const TruncSeries& a, const TruncSeries& b)
{
    if (a.order() != b.order()) {
        return false;
    }
    for (int i = 0; i <= a.order(); ++i) {
        if (!(a[i] == b[i])) {
            return false;
        }
    }
    return true;
}

int mobius(int n)
{
    if (n < 1) {
        throw std::invalid_argument("mobius: n must be positive");
    }
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

TruncSeries pleth_exp(const TruncSeries& a)
{
    if (!a[0].is_zero()) {
        throw std::domain_error("pleth_exp: constant term must be zero");
    }
    const int order = a.order();
    // S = sum_n psi_n(A) / n, then E = exp(S) through n E_n = sum_k k S_k E_{n-k}.
    TruncSeries s(a.vars(), order);
    for (int n = 1; n <= order; ++n) {
        TruncSeries term = a.adams(n);
        term *= Rational(1, n);
        s += term;
    }
    TruncSeries e = TruncSeries::one(a.vars(), order);
    for (int n = 1; n <= order; ++n) {
        Fraction acc(a.vars());
        for (int k = 1; k <= n; ++k) {
            if (!s[k].is_zero() && !e[n - k].is_zero()) {
                acc += (s[k] * e[n - k]) * Rational(k);
            }
        }
        acc *= Rational(1, n);
        e.coeff(n) = std::move(acc.reduce());
    }
    return e;
}

TruncSeries pleth_log(const TruncSeries& b)
{
    if (!(b[0] == Fraction::constant(b.vars(), 1))) {
        throw std::domain_error("pleth_log: constant term must be one");
    }
    const int order = b.order();
    // Ordinary log: n L_n = n B_n - sum_{k<n} k L_k B_{n-k}.
    TruncSeries log(b.vars(), order);
    for (int n = 1; n <= order; ++n) {
        Fraction acc = b[n] * Rational(n);
        for (int k = 1; k < n; ++k) {
            if (!log[k].is_zero() && !b[n - k].is_zero()) {
                acc -= (log[k] * b[n - k]) * Rational(k);
            }
        }
        acc *= Rational(1, n);
        log.coeff(n) = std::move(acc.reduce());
    }
    // Mobius inversion of log B = sum_k psi_k(A) / k.
    TruncSeries out(b.vars(), order);
    for (int r = 1; r <= order; ++r) {
        Fraction acc(b.vars());
        for (int d = 1; d <= r; ++d) {
            if (r % d != 0) {
                continue;
            }
            const int mu = mobius(d);
            if (mu == 0 || log[r / d].is_zero()) {
                continue;
            }
            acc += log[r / d].adams(d) * Rational(mu, d);
        }
        out.coeff(r) = std::move(acc.reduce());
    }
    return out;
}

} // namespace higgsdt
