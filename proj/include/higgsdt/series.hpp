#pragma once

#include <vector>

#include "higgsdt/fraction.hpp"

namespace higgsdt {

/// Power series in an external variable T, truncated after T^order, with
/// rational-function coefficients. The Adams operation acts on T as well
/// (T -> T^n).
class TruncSeries {
public:
    TruncSeries(VarTable vars, int order);

    static TruncSeries one(VarTable vars, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const VarTable& vars() const noexcept { return vars_; }

    const Fraction& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    Fraction& coeff(int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Rational& c);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    TruncSeries adams(int n) const;

    /// Reduce every coefficient.
    TruncSeries& reduce();

    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

private:
    VarTable vars_;
    std::vector<Fraction> coeffs_;
};

int mobius(int n);

/// Exp[A] = exp(sum_n psi_n(A) / n); requires a zero constant term.
TruncSeries pleth_exp(const TruncSeries& a);

/// Log[B] = sum_n mu(n)/n psi_n(log B); requires constant term one.
TruncSeries pleth_log(const TruncSeries& b);

} // namespace higgsdt
