#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "higgsdt/laurent.hpp"

namespace higgsdt {

/// Integer coefficients of the d-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_coefficients(int d);

/// Orders e with Phi_d(y^n) = prod_e Phi_e(y).
std::vector<int> cyclotomic_orders_of_power(int d, int n);

/// Phi_order(base) with `base` a primitive monomial (exponent gcd 1) whose
/// first nonzero exponent is positive. Every binomial factors uniquely into
/// such atoms times a signed monomial unit, so denominators built from them
/// have exact gcd/lcm by multiplicity.
struct CycloAtom {
    Monomial base;
    int order = 1;

    friend bool operator==(const CycloAtom&, const CycloAtom&) = default;
    friend auto operator<=>(const CycloAtom&, const CycloAtom&) = default;
};

LaurentPoly expand_atom(const CycloAtom& atom, const VarTable& vars);

/// value = scalar * unit * prod(atoms).
struct AtomDecomposition {
    Rational scalar = 1;
    Monomial unit;
    std::vector<CycloAtom> atoms;
};

/// Factor the binomial (leading - trailing); orientation sign not applied.
AtomDecomposition decompose(const BinomialFactor& f);
/// Factor Phi_d(w) for an arbitrary monomial w.
AtomDecomposition decompose_cyclotomic(int d, const Monomial& w);

/// Rational function: Laurent polynomial numerator over a product of
/// cyclotomic atoms. Denominators are never expanded.
class Fraction {
public:
    using Denominator = std::map<CycloAtom, int>;

    explicit Fraction(VarTable vars);
    Fraction(LaurentPoly numerator); // NOLINT(google-explicit-constructor)

    static Fraction constant(VarTable vars, const Rational& c);
    /// 1 / (a - b).
    static Fraction inverse_of(const VarTable& vars, const Monomial& a, const Monomial& b);

    const VarTable& vars() const noexcept { return num_.vars(); }
    const LaurentPoly& numerator() const noexcept { return num_; }
    const Denominator& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.empty(); }

    Fraction& operator+=(const Fraction& o);
    Fraction& operator-=(const Fraction& o);
    Fraction& operator*=(const Fraction& o);
    Fraction& operator*=(const LaurentPoly& p);
    Fraction& operator*=(const Rational& c);
    friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
    friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
    friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
    friend Fraction operator*(Fraction a, const Rational& c) { return a *= c; }
    Fraction operator-() const;

    /// Multiply by (a - b), cancelling matching denominator atoms first.
    Fraction& multiply_binomial(const Monomial& a, const Monomial& b);
    /// Divide by (a - b).
    Fraction& divide_binomial(const Monomial& a, const Monomial& b);

    /// Cancel every denominator atom that divides the numerator.
    Fraction& reduce();

    /// The equal Laurent polynomial; throws NotDivisible when a denominator
    /// atom survives reduction.
    LaurentPoly to_laurent() const;

    Fraction adams(int n) const;
    Fraction substitute(const MonomialMap& map) const;

    /// Value at var = 0; throws std::domain_error on a pole there.
    Fraction evaluate_at_zero(std::size_t var) const;

    /// Coefficients of var^0 .. var^max_degree of the expansion at var = 0.
    /// Throws std::domain_error when the expansion has a pole.
    std::vector<Fraction> expand_in(std::size_t var, int max_degree) const;

    Rational evaluate(std::span<const Rational> point) const;

    friend bool operator==(const Fraction& a, const Fraction& b);

    std::string to_string() const;

private:
    Fraction& absorb(const AtomDecomposition& d, bool into_denominator);

    LaurentPoly num_;
    Denominator den_;
};

} // namespace higgsdt
