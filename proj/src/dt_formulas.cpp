#include "higgsdt/dt_formulas.hpp"

#include <numeric>

#include "higgsdt/format.hpp"
#include "higgsdt/parallel.hpp"

namespace higgsdt {

CurveParams CurveParams::twisted(int genus, int ell)
{
    CurveParams cp{genus, ell, Mode::twisted};
    cp.validate();
    return cp;
}

CurveParams CurveParams::canonical(int genus)
{
    CurveParams cp{genus, 2 * genus - 2, Mode::canonical};
    cp.validate();
    return cp;
}

void CurveParams::validate() const
{
    if (genus < 0) {
        throw std::invalid_argument("genus must be nonnegative");
    }
    if (genus + 2 > static_cast<int>(kMaxVariables)) {
        throw std::invalid_argument("genus too large for the variable table");
    }
    if (mode == Mode::twisted && p() <= 0) {
        throw std::invalid_argument("twisted mode needs p = l - (2g - 2) > 0, got p = " + std::to_string(p()));
    }
    if (mode == Mode::canonical) {
        if (genus < 1) {
            throw std::invalid_argument("canonical mode needs genus >= 1");
        }
        if (p() != 0) {
            throw std::invalid_argument("canonical mode needs l = 2g - 2");
        }
    }
}

std::string HalfPowerValue::to_string() const
{
    std::string s = sign < 0 ? "-" : "";
    if (k != 0) {
        s += "q^(" + std::to_string(k) + "/2) * ";
    }
    return s + "(" + poly_to_string(body) + ")";
}

namespace {

Monomial qt(int a, int b)
{
    Monomial m;
    m.set(kVarQ, a);
    m.set(kVarT, b);
    return m;
}

LaurentPoly binomial(const VarTable& vars, const Monomial& a, const Monomial& b)
{
    return LaurentPoly(vars, {{a, Rational(1)}, {b, Rational(-1)}});
}

} // namespace

LaurentPoly n_lambda(const Partition& lambda, const VarTable& vars, const Monomial& u)
{
    LaurentPoly out = LaurentPoly::constant(vars, 1);
    for (const auto& hb : hook_boxes(lambda)) {
        // (q^a - u t^{l+1}) (q^{a+1} - u^{-1} t^l)
        out *= binomial(vars, qt(hb.arm, 0), u * qt(0, hb.leg + 1));
        out *= binomial(vars, qt(hb.arm + 1, 0), u.inverse() * qt(0, hb.leg));
    }
    return out;
}

Fraction zstar_term(const Partition& lambda, const CurveParams& cp)
{
    const VarTable vars = cp.vars();
    const int p = cp.p();
    const Rational sign = (lambda.weight() * p) % 2 == 0 ? 1 : -1;
    LaurentPoly num = LaurentPoly::monomial(vars, qt(n_stat(conjugate(lambda)) * p, n_stat(lambda) * p), sign);
    for (int i = 0; i < cp.genus; ++i) {
        num *= n_lambda(lambda, vars, Monomial::variable(alpha_var(i), -1));
    }
    Fraction f(std::move(num));
    for (const auto& hb : hook_boxes(lambda)) {
        f.divide_binomial(qt(hb.arm, 0), qt(0, hb.leg + 1));
        f.divide_binomial(qt(hb.arm + 1, 0), qt(0, hb.leg));
    }
    return f;
}

namespace {

template <class Term>
TruncSeries partition_series(const CurveParams& cp, int order, Term term)
{
    cp.validate();
    std::vector<Partition> all;
    for (int n = 1; n <= order; ++n) {
        for (auto& l : enumerate_partitions(n)) {
            all.push_back(std::move(l));
        }
    }
    std::vector<Fraction> terms(all.size(), Fraction(cp.vars()));
    parallel_for(all.size(), [&](std::size_t i) { terms[i] = term(all[i], cp); });
    TruncSeries s = TruncSeries::one(cp.vars(), order);
    for (std::size_t i = 0; i < all.size(); ++i) {
        s.coeff(all[i].weight()) += terms[i];
    }
    return s.reduce();
}

} // namespace

TruncSeries zstar_series(const CurveParams& cp, int order)
{
    return partition_series(cp, order, zstar_term);
}

LaurentPoly clear_to_integral(Fraction f, const std::string& what)
{
    f.reduce();
    LaurentPoly p(f.vars());
    try {
        p = f.to_laurent();
    } catch (const NotDivisible& e) {
        throw IntegralityError(what + ": denominator does not clear: " + e.what());
    }
    if (!p.has_integer_coefficients()) {
        throw IntegralityError(what + ": non-integer coefficient in " + poly_to_string(p));
    }
    return p;
}

std::vector<LaurentPoly> idt_star(const CurveParams& cp, int order)
{
    if (order < 1) {
        return {};
    }
    const TruncSeries log = pleth_log(zstar_series(cp, order));
    const Monomial q = Monomial::variable(kVarQ);
    const Monomial t = Monomial::variable(kVarT);
    std::vector<LaurentPoly> out;
    for (int r = 1; r <= order; ++r) {
        Fraction f = log[r];
        f.multiply_binomial(q, Monomial());
        f.multiply_binomial(Monomial(), t);
        out.push_back(clear_to_integral(std::move(f), "IDT_" + std::to_string(r)));
    }
    return out;
}

LaurentPoly at_t_one(const LaurentPoly& p)
{
    MonomialMap map = MonomialMap::identity(p.vars());
    map.images[kVarT] = Monomial();
    return p.substitute(map);
}

HalfPowerValue omega_from_idt(const CurveParams& cp, int r, const LaurentPoly& idt_r)
{
    cp.validate();
    HalfPowerValue v(at_t_one(idt_r));
    if (cp.mode == Mode::canonical) {
        v.body *= Monomial::variable(kVarQ);
    } else {
        v.k = cp.p() * r;
    }
    // sign taken from the highest term
    if (!v.body.is_zero() && v.body.terms().back().second < 0) {
        v.sign = -1;
        v.body = -v.body;
    }
    return v;
}

HalfPowerValue omega(const CurveParams& cp, int r)
{
    return omega_from_idt(cp, r, idt_star(cp, r).at(static_cast<std::size_t>(r - 1)));
}

namespace {

void require_volume_args(const CurveParams& cp, int r, int d)
{
    if (cp.mode != Mode::twisted) {
        throw std::invalid_argument("the volume formula needs twisted mode");
    }
    if (r < 1 || std::gcd(r, d) != 1) {
        throw std::invalid_argument("volume formula needs coprime (r, d), got (" + std::to_string(r) + ", " +
                                    std::to_string(d) + ")");
    }
}

} // namespace

LaurentPoly moduli_volume_from_idt(const CurveParams& cp, int r, int d, const LaurentPoly& idt_r)
{
    require_volume_args(cp, r, d);
    const int p = cp.p();
    const int e = (cp.genus - 1) * r * r + p * r * (r + 1) / 2;
    LaurentPoly v = at_t_one(idt_r) * Monomial::variable(kVarQ, e);
    if ((p * r) % 2 != 0) {
        v = -v;
    }
    return v;
}

LaurentPoly moduli_volume(const CurveParams& cp, int r, int d)
{
    require_volume_args(cp, r, d);
    return moduli_volume_from_idt(cp, r, d, idt_star(cp, r).at(static_cast<std::size_t>(r - 1)));
}

Fraction zeta_fraction(const VarTable& vars, int genus, const Monomial& x)
{
    LaurentPoly num = LaurentPoly::constant(vars, 1);
    const Monomial q = Monomial::variable(kVarQ);
    for (int i = 0; i < genus; ++i) {
        const Monomial a = Monomial::variable(alpha_var(i));
        num *= binomial(vars, Monomial(), a * x);
        num *= binomial(vars, Monomial(), a.inverse() * q * x);
    }
    Fraction f(std::move(num));
    f.divide_binomial(Monomial(), x);
    f.divide_binomial(Monomial(), q * x);
    return f;
}

Fraction alt_h_term(const Partition& lambda, const CurveParams& cp)
{
    const VarTable vars = cp.vars();
    const int p = cp.p();
    const int g = cp.genus;
    Fraction f = Fraction::constant(vars, 1);
    for (const auto& hb : hook_boxes(lambda)) {
        const int a = hb.arm;
        const int l = hb.leg;
        // (-t^{a-l} q^a)^p t^{(1-g)(2l+1)} Z_X(t^h q^a)
        const Rational sign = p % 2 == 0 ? 1 : -1;
        f *= LaurentPoly::monomial(vars, qt(a * p, (a - l) * p + (1 - g) * (2 * l + 1)), sign);
        f *= zeta_fraction(vars, g, qt(a, hb.hook()));
    }
    return f;
}

TruncSeries alt_h_series(const CurveParams& cp, int order)
{
    if (cp.mode != Mode::twisted) {
        throw std::invalid_argument("the alternative series needs twisted mode");
    }
    return partition_series(cp, order, alt_h_term);
}

std::vector<LaurentPoly> alt_idt(const CurveParams& cp, int order)
{
    if (order < 1) {
        return {};
    }
    const TruncSeries log = pleth_log(alt_h_series(cp, order));
    const Monomial q = Monomial::variable(kVarQ);
    const Monomial t = Monomial::variable(kVarT);
    std::vector<LaurentPoly> out;
    for (int r = 1; r <= order; ++r) {
        Fraction f = log[r];
        f.multiply_binomial(Monomial(), t);
        f.multiply_binomial(Monomial(), q * t);
        out.push_back(clear_to_integral(std::move(f), "H_" + std::to_string(r)));
    }
    return out;
}

SubstitutionReport substitution_identity_check(const CurveParams& cp, int max_weight)
{
    cp.validate();
    MonomialMap map = MonomialMap::identity(cp.vars());
    map.images[kVarQ] = qt(1, 1);
    map.images[kVarT] = qt(0, -1);
    SubstitutionReport report;
    for (int n = 0; n <= max_weight; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            const Fraction lhs = alt_h_term(lambda, cp).substitute(map);
            const Fraction rhs = n == 0 ? Fraction::constant(cp.vars(), 1) : zstar_term(lambda, cp);
            if (!(lhs == rhs)) {
                report.ok = false;
                report.mismatches.push_back(lambda);
            }
        }
    }
    return report;
}

bool weil_symmetry_check(const LaurentPoly& p)
{
    const int g = table_genus(*p.vars());
    const Monomial q = Monomial::variable(kVarQ);
    for (int i = 0; i < g; ++i) {
        MonomialMap flip = MonomialMap::identity(p.vars());
        flip.images[alpha_var(i)] = q * Monomial::variable(alpha_var(i), -1);
        if (!(p.substitute(flip) == p)) {
            return false;
        }
        for (int j = i + 1; j < g; ++j) {
            MonomialMap swap = MonomialMap::identity(p.vars());
            swap.images[alpha_var(i)] = Monomial::variable(alpha_var(j));
            swap.images[alpha_var(j)] = Monomial::variable(alpha_var(i));
            if (!(p.substitute(swap) == p)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace higgsdt
