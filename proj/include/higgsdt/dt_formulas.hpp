#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "higgsdt/fraction.hpp"
#include "higgsdt/partitions.hpp"
#include "higgsdt/series.hpp"

namespace higgsdt {

enum class Mode { twisted, canonical };

/// Curve genus g, twist degree l and p = l - (2g - 2).
struct CurveParams {
    int genus = 0;
    int ell = 1;
    Mode mode = Mode::twisted;

    int p() const noexcept { return ell - (2 * genus - 2); }

    /// Throws std::invalid_argument for p <= 0 or g < 0.
    static CurveParams twisted(int genus, int ell);
    /// l = 2g - 2; throws std::invalid_argument for g < 1.
    static CurveParams canonical(int genus);

    void validate() const;
    VarTable vars() const { return standard_table(genus); }
};

/// Integrality of an invariant failed: a denominator survived or a
/// coefficient is not an integer.
class IntegralityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// sign * q^(k/2) * body; body has a positive leading coefficient.
struct HalfPowerValue {
    int sign = 1;
    int k = 0;
    LaurentPoly body;

    explicit HalfPowerValue(LaurentPoly b) : body(std::move(b)) {}

    std::string to_string() const;
};

/// N_lambda(u, q, t) expanded; u is a monomial (the unit monomial means u = 1).
LaurentPoly n_lambda(const Partition& lambda, const VarTable& vars, const Monomial& u);

/// Coefficient of T^|lambda| contributed by lambda to Z.
Fraction zstar_term(const Partition& lambda, const CurveParams& cp);
TruncSeries zstar_series(const CurveParams& cp, int order);

/// IDT_1 .. IDT_order, each an integral Laurent polynomial in q, t, alpha.
std::vector<LaurentPoly> idt_star(const CurveParams& cp, int order);

/// Clear (q - 1)(1 - t) * coefficient to an integral Laurent polynomial; throws
/// IntegralityError otherwise.
LaurentPoly clear_to_integral(Fraction f, const std::string& what);

/// Substitute t = 1.
LaurentPoly at_t_one(const LaurentPoly& p);

/// Omega_r from IDT_r(q, t).
HalfPowerValue omega_from_idt(const CurveParams& cp, int r, const LaurentPoly& idt_r);
HalfPowerValue omega(const CurveParams& cp, int r);

/// Volume polynomial of the moduli space for coprime (r, d).
LaurentPoly moduli_volume_from_idt(const CurveParams& cp, int r, int d, const LaurentPoly& idt_r);
LaurentPoly moduli_volume(const CurveParams& cp, int r, int d);

/// Z_X(x) = prod_i (1 - a_i x)(1 - q a_i^{-1} x) / ((1 - x)(1 - q x)).
Fraction zeta_fraction(const VarTable& vars, int genus, const Monomial& x);

Fraction alt_h_term(const Partition& lambda, const CurveParams& cp);
TruncSeries alt_h_series(const CurveParams& cp, int order);
/// Coefficients of (1 - t)(1 - q t) Log H.
std::vector<LaurentPoly> alt_idt(const CurveParams& cp, int order);

struct SubstitutionReport {
    bool ok = true;
    std::vector<Partition> mismatches;
};
/// Each lambda-term of H under q -> q t, t -> 1/t equals zstar_term(lambda).
SubstitutionReport substitution_identity_check(const CurveParams& cp, int max_weight);

/// Invariance under alpha_i <-> alpha_j and alpha_i -> q / alpha_i.
bool weil_symmetry_check(const LaurentPoly& p);

} // namespace higgsdt
