#include "higgsdt/fraction.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "higgsdt/format.hpp"

namespace higgsdt {

const std::vector<long>& cyclotomic_coefficients(int d)
{
    if (d < 1) {
        throw std::invalid_argument("cyclotomic order must be positive");
    }
    static std::mutex mutex;
    static std::unordered_map<int, std::vector<long>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(d); it != cache.end()) {
            return it->second;
        }
    }
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, all divisors monic.
    std::vector<long> poly(static_cast<std::size_t>(d) + 1, 0);
    poly.front() = -1;
    poly.back() = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) {
            continue;
        }
        const std::vector<long>& div = cyclotomic_coefficients(e);
        const std::size_t dn = div.size() - 1;
        std::vector<long> quot(poly.size() - dn, 0);
        for (std::size_t k = quot.size(); k-- > 0;) {
            const long c = poly[k + dn];
            quot[k] = c;
            for (std::size_t j = 0; j <= dn; ++j) {
                poly[k + j] -= c * div[j];
            }
        }
        poly = std::move(quot);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(d, std::move(poly)).first->second;
}

std::vector<int> cyclotomic_orders_of_power(int d, int n)
{
    if (n < 1) {
        throw std::invalid_argument("cyclotomic_orders_of_power: n must be positive");
    }
    if (n == 1) {
        return {d};
    }
    int p = 2;
    while (n % p != 0) {
        ++p;
    }
    // Phi_d(z^p) = Phi_{pd}(z) * (p divides d ? 1 : Phi_d(z)), with z = y^{n/p}.
    std::vector<int> out = cyclotomic_orders_of_power(p * d, n / p);
    if (d % p != 0) {
        auto more = cyclotomic_orders_of_power(d, n / p);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

LaurentPoly expand_atom(const CycloAtom& atom, const VarTable& vars)
{
    const auto& c = cyclotomic_coefficients(atom.order);
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] != 0) {
            terms.emplace_back(atom.base.pow(static_cast<Monomial::Exponent>(j)), Rational(c[j]));
        }
    }
    return LaurentPoly(vars, std::move(terms));
}

namespace {

int phi_degree(int d) { return static_cast<int>(cyclotomic_coefficients(d).size()) - 1; }

std::vector<Rational> rational_coefficients(int d)
{
    const auto& c = cyclotomic_coefficients(d);
    return {c.begin(), c.end()};
}

} // namespace

AtomDecomposition decompose_cyclotomic(int d, const Monomial& w)
{
    AtomDecomposition out;
    if (w.is_one()) {
        long value = 0;
        for (long c : cyclotomic_coefficients(d)) {
            value += c;
        }
        if (value == 0) {
            throw std::domain_error("cyclotomic factor vanishes identically");
        }
        out.scalar = value;
        return out;
    }
    Monomial v = w;
    if (w.leading_sign() < 0) {
        // Phi_d(w) = eps * w^phi(d) * Phi_d(1/w); eps = -1 only for d = 1.
        out.scalar = d == 1 ? -1 : 1;
        out.unit = w.pow(phi_degree(d));
        v = w.inverse();
    }
    const Monomial::Exponent k = v.content();
    Monomial base;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        base.set(i, v[i] / k);
    }
    for (int e : cyclotomic_orders_of_power(d, k)) {
        out.atoms.push_back({base, e});
    }
    return out;
}

AtomDecomposition decompose(const BinomialFactor& f)
{
    // lead - trail = -lead * Phi_1(trail / lead)
    AtomDecomposition out = decompose_cyclotomic(1, f.trailing() / f.leading());
    out.scalar = -out.scalar;
    out.unit *= f.leading();
    return out;
}

// ---------------------------------------------------------------- Fraction

Fraction::Fraction(VarTable vars) : num_(std::move(vars)) {}

Fraction::Fraction(LaurentPoly numerator) : num_(std::move(numerator)) {}

Fraction Fraction::constant(VarTable vars, const Rational& c)
{
    return Fraction(LaurentPoly::constant(std::move(vars), c));
}

Fraction Fraction::inverse_of(const VarTable& vars, const Monomial& a, const Monomial& b)
{
    Fraction f = constant(vars, 1);
    f.divide_binomial(a, b);
    return f;
}

Fraction& Fraction::absorb(const AtomDecomposition& d, bool into_denominator)
{
    if (into_denominator) {
        num_ *= d.unit.inverse();
        num_ *= Rational(1 / d.scalar);
        for (const auto& a : d.atoms) {
            ++den_[a];
        }
        return *this;
    }
    num_ *= d.unit;
    num_ *= d.scalar;
    for (const auto& a : d.atoms) {
        if (auto it = den_.find(a); it != den_.end()) {
            if (--it->second == 0) {
                den_.erase(it);
            }
        } else {
            num_ *= expand_atom(a, vars());
        }
    }
    if (num_.is_zero()) {
        den_.clear();
    }
    return *this;
}

Fraction& Fraction::multiply_binomial(const Monomial& a, const Monomial& b)
{
    const BinomialFactor f(a, b);
    num_ *= Rational(f.sign());
    return absorb(decompose(f), false);
}

Fraction& Fraction::divide_binomial(const Monomial& a, const Monomial& b)
{
    const BinomialFactor f(a, b);
    num_ *= Rational(f.sign());
    return absorb(decompose(f), true);
}

namespace {

LaurentPoly times_atoms(LaurentPoly p, const Fraction::Denominator& have, const Fraction::Denominator& want)
{
    for (const auto& [atom, m] : want) {
        auto it = have.find(atom);
        const int missing = m - (it == have.end() ? 0 : it->second);
        if (missing > 0) {
            const LaurentPoly e = expand_atom(atom, p.vars());
            for (int k = 0; k < missing; ++k) {
                p *= e;
            }
        }
    }
    return p;
}

} // namespace

Fraction& Fraction::operator+=(const Fraction& o)
{
    if (!same_table(vars(), o.vars())) {
        throw std::invalid_argument("variable table mismatch");
    }
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        Denominator lcm = den_;
        for (const auto& [atom, m] : o.den_) {
            int& slot = lcm[atom];
            slot = std::max(slot, m);
        }
        LaurentPoly a = times_atoms(std::move(num_), den_, lcm);
        a += times_atoms(o.num_, o.den_, lcm);
        num_ = std::move(a);
        den_ = std::move(lcm);
    }
    if (num_.is_zero()) {
        den_.clear();
    }
    return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction Fraction::operator-() const
{
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
}

Fraction& Fraction::operator*=(const Fraction& o)
{
    num_ *= o.num_;
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (const auto& [atom, m] : o.den_) {
        den_[atom] += m;
    }
    return *this;
}

Fraction& Fraction::operator*=(const LaurentPoly& p)
{
    num_ *= p;
    if (num_.is_zero()) {
        den_.clear();
    }
    return *this;
}

Fraction& Fraction::operator*=(const Rational& c)
{
    num_ *= c;
    if (num_.is_zero()) {
        den_.clear();
    }
    return *this;
}

Fraction& Fraction::reduce()
{
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        const auto coeffs = rational_coefficients(it->first.order);
        while (it->second > 0) {
            auto q = try_divide_along(num_, it->first.base, coeffs);
            if (!q) {
                break;
            }
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    return *this;
}

LaurentPoly Fraction::to_laurent() const
{
    Fraction r = *this;
    r.reduce();
    if (!r.den_.empty()) {
        throw NotDivisible("rational function has a nontrivial denominator: " + r.to_string());
    }
    return r.num_;
}

Fraction Fraction::adams(int n) const
{
    Fraction r(num_.adams(n));
    for (const auto& [atom, m] : den_) {
        for (int e : cyclotomic_orders_of_power(atom.order, n)) {
            r.den_[{atom.base, e}] += m;
        }
    }
    return r;
}

Fraction Fraction::substitute(const MonomialMap& map) const
{
    Fraction r(num_.substitute(map));
    for (const auto& [atom, m] : den_) {
        const AtomDecomposition d = decompose_cyclotomic(atom.order, map.apply(atom.base));
        for (int k = 0; k < m; ++k) {
            r.absorb(d, true);
        }
    }
    return r;
}

Fraction Fraction::evaluate_at_zero(std::size_t var) const
{
    Fraction r(vars());
    LaurentPoly num = num_;
    Rational scale = 1;
    for (const auto& [atom, m] : den_) {
        const auto e = atom.base[var];
        if (e == 0) {
            r.den_[atom] = m;
            continue;
        }
        Rational at_zero = cyclotomic_coefficients(atom.order).front();
        if (e < 0) {
            // Phi_d(y) = eps * y^phi(d) * Phi_d(1/y)
            if (atom.order == 1) {
                at_zero = -at_zero;
            }
            num *= atom.base.pow(-phi_degree(atom.order) * m);
        }
        for (int k = 0; k < m; ++k) {
            scale /= at_zero;
        }
    }
    num *= scale;
    if (!num.is_zero() && num.min_exponent(var) < 0) {
        throw std::domain_error("pole at " + vars()->name(var) + " = 0");
    }
    r.num_ = num.slice(var, 0);
    if (r.num_.is_zero()) {
        r.den_.clear();
    }
    return r;
}

std::vector<Fraction> Fraction::expand_in(std::size_t var, int max_degree) const
{
    std::vector<Fraction> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)), Fraction(vars()));
    if (max_degree < 0 || num_.is_zero()) {
        return out;
    }
    LaurentPoly num = num_;
    Denominator coefficient_den;
    struct Geometric {
        CycloAtom atom;
        int multiplicity;
    };
    std::vector<Geometric> series;
    for (const auto& [atom, m] : den_) {
        const auto e = atom.base[var];
        if (e == 0) {
            coefficient_den[atom] = m;
            continue;
        }
        if (e > 0) {
            series.push_back({atom, m});
            continue;
        }
        const Monomial flipped = atom.base.inverse();
        num *= atom.base.pow(-phi_degree(atom.order) * m);
        if (atom.order == 1 && m % 2 == 1) {
            num = -num;
        }
        series.push_back({{flipped, atom.order}, m});
    }
    if (num.min_exponent(var) < 0) {
        throw std::domain_error("expansion in " + vars()->name(var) + " has a pole at zero");
    }
    const auto cap = static_cast<Monomial::Exponent>(max_degree);
    for (const auto& [atom, m] : series) {
        // 1/Phi_d(y) = -prod_{e | d, e < d} Phi_e(y) * sum_j y^{dj}
        const Monomial step = atom.base.pow(atom.order);
        std::vector<LaurentPoly::Term> geo;
        Monomial power;
        while (power[var] <= cap) {
            geo.emplace_back(power, Rational(-1));
            power *= step;
        }
        LaurentPoly inv(vars(), std::move(geo));
        for (int e = 1; e < atom.order; ++e) {
            if (atom.order % e == 0) {
                inv = LaurentPoly::multiply_truncated(inv, expand_atom({atom.base, e}, vars()), var, cap);
            }
        }
        for (int k = 0; k < m; ++k) {
            num = LaurentPoly::multiply_truncated(num, inv, var, cap);
        }
    }
    for (int k = 0; k <= max_degree; ++k) {
        Fraction c(num.slice(var, k));
        if (!c.is_zero()) {
            c.den_ = coefficient_den;
        }
        out[static_cast<std::size_t>(k)] = std::move(c);
    }
    return out;
}

Rational Fraction::evaluate(std::span<const Rational> point) const
{
    Rational value = num_.evaluate(point);
    for (const auto& [atom, m] : den_) {
        const Rational d = expand_atom(atom, vars()).evaluate(point);
        if (d == 0) {
            throw std::domain_error("denominator vanishes at the evaluation point");
        }
        for (int k = 0; k < m; ++k) {
            value /= d;
        }
    }
    return value;
}

bool operator==(const Fraction& a, const Fraction& b)
{
    if (!same_table(a.vars(), b.vars())) {
        return false;
    }
    if (a.den_ == b.den_) {
        return a.num_ == b.num_;
    }
    return (a - b).is_zero();
}

std::string Fraction::to_string() const
{
    std::string s = poly_to_string(num_);
    if (den_.empty()) {
        return s;
    }
    s = "(" + s + ") / (";
    bool first = true;
    for (const auto& [atom, m] : den_) {
        if (!first) {
            s += " * ";
        }
        first = false;
        s += "(" + poly_to_string(expand_atom(atom, vars())) + ")";
        if (m > 1) {
            s += "^" + std::to_string(m);
        }
    }
    return s + ")";
}

} // namespace higgsdt
