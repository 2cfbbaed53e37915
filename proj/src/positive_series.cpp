#include "higgsdt/positive_series.hpp"

#include <algorithm>
#include <numeric>

#include "higgsdt/parallel.hpp"

namespace higgsdt {

namespace {

Monomial alpha_inv(int k) { return Monomial::variable(alpha_var(k), -1); }

// 1 - m, or zero when m is the unit monomial.
bool times_one_minus(Fraction& f, const Monomial& m)
{
    if (m.is_one()) {
        f = Fraction(f.vars());
        return false;
    }
    f.multiply_binomial(Monomial(), m);
    return true;
}

void over_one_minus(Fraction& f, const Monomial& m)
{
    if (m.is_one()) {
        throw std::domain_error("f: a specialized denominator vanishes");
    }
    f.divide_binomial(Monomial(), m);
}

Fraction sigma_term(const std::vector<Monomial>& w, int genus, const VarTable& vars)
{
    const std::size_t n = w.size();
    const Monomial q = Monomial::variable(kVarQ);
    Fraction f = Fraction::constant(vars, 1);
    for (std::size_t i = 1; i < n; ++i) {
        if (!times_one_minus(f, w[i])) {
            return f;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const Monomial ratio = w[i] / w[j];
            if (i > j + 1 && !times_one_minus(f, q * ratio)) {
                return f;
            }
            for (int k = 0; k < genus; ++k) {
                if (!times_one_minus(f, alpha_inv(k) * ratio)) {
                    return f;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const Monomial ratio = w[i] / w[j];
            over_one_minus(f, ratio);
            for (int k = 0; k < genus; ++k) {
                over_one_minus(f, q * alpha_inv(k) * ratio);
            }
        }
    }
    return f;
}

} // namespace

Fraction f_specialized(const std::vector<Monomial>& z, int genus, const VarTable& vars)
{
    const std::size_t n = z.size();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Fraction sum(vars);
    std::vector<Monomial> w(n);
    do {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = z[sigma[i]];
        }
        sum += sigma_term(w, genus, vars);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    for (std::size_t i = 0; i < n && !sum.is_zero(); ++i) {
        for (int k = 0; k < genus; ++k) {
            sum.multiply_binomial(Monomial(), alpha_inv(k));
            over_one_minus(sum, alpha_inv(k) * z[i]);
        }
    }
    return sum.reduce();
}

Fraction f_symbolic(int n, int genus)
{
    const VarTable vars = standard_table(genus, n);
    std::vector<Monomial> z;
    for (int i = 0; i < n; ++i) {
        z.push_back(Monomial::variable(z_var(genus, i)));
    }
    return f_specialized(z, genus, vars);
}

Fraction f_lambda(const Partition& lambda, const CurveParams& cp, int n)
{
    if (n < lambda.length()) {
        throw std::invalid_argument("f_lambda: padding shorter than the partition");
    }
    std::vector<Monomial> z;
    for (int i = 1; i <= n; ++i) {
        Monomial m;
        m.set(kVarQ, i - n);
        m.set(kVarT, lambda.part(i));
        z.push_back(m);
    }
    return f_specialized(z, cp.genus, cp.vars());
}

bool inductive_property_check(int n, int genus)
{
    const VarTable vars = standard_table(genus, n);
    const Monomial q = Monomial::variable(kVarQ);
    std::vector<Monomial> left{Monomial()};
    std::vector<Monomial> right;
    for (int i = 0; i < n; ++i) {
        const Monomial z = Monomial::variable(z_var(genus, i));
        left.push_back(z);
        right.push_back(q * z);
    }
    return f_specialized(left, genus, vars) == f_specialized(right, genus, vars);
}

bool laurent_property_check(int n, int genus)
{
    Fraction f = f_symbolic(n, genus);
    const Monomial q = Monomial::variable(kVarQ);
    for (int k = 0; k < genus; ++k) {
        for (int i = 0; i < n; ++i) {
            const Monomial zi = Monomial::variable(z_var(genus, i));
            f.multiply_binomial(Monomial(), alpha_inv(k) * zi);
            for (int j = 0; j < n; ++j) {
                if (j != i) {
                    f.multiply_binomial(Monomial(), q * alpha_inv(k) * zi / Monomial::variable(z_var(genus, j)));
                }
            }
        }
    }
    return f.reduce().is_polynomial();
}

bool alpha_limit_check(int n, int genus)
{
    const Fraction f = f_symbolic(n, genus);
    MonomialMap invert = MonomialMap::identity(f.vars());
    for (int k = 0; k < genus; ++k) {
        invert.images[alpha_var(k)] = alpha_inv(k);
    }
    Fraction g = f.substitute(invert);
    for (int k = 0; k < genus; ++k) {
        g = g.evaluate_at_zero(alpha_var(k));
    }
    return g == Fraction::constant(f.vars(), 1);
}

TruncSeries zplus_series(const CurveParams& cp, int order)
{
    if (cp.mode != Mode::twisted) {
        throw std::invalid_argument("the positive series needs twisted mode");
    }
    cp.validate();
    std::vector<Partition> all;
    for (int n = 1; n <= order; ++n) {
        for (auto& l : enumerate_partitions(n)) {
            all.push_back(std::move(l));
        }
    }
    std::vector<Fraction> terms(all.size(), Fraction(cp.vars()));
    parallel_for(all.size(), [&](std::size_t i) {
        const Partition c = conjugate(all[i]);
        terms[i] = zstar_term(all[i], cp) * f_lambda(c, cp, c.length());
    });
    TruncSeries s = TruncSeries::one(cp.vars(), order);
    for (std::size_t i = 0; i < all.size(); ++i) {
        s.coeff(all[i].weight()) += terms[i];
    }
    return s.reduce();
}

OmegaPlusTable omega_plus(const CurveParams& cp, int order, int depth)
{
    OmegaPlusTable table;
    table.order = order;
    table.depth = depth;
    if (order < 1) {
        return table;
    }
    const TruncSeries log = pleth_log(zplus_series(cp, order));
    table.entries.resize(static_cast<std::size_t>(order));
    parallel_for(static_cast<std::size_t>(order), [&](std::size_t i) {
        Fraction f = log[static_cast<int>(i) + 1];
        f.multiply_binomial(Monomial::variable(kVarQ), Monomial());
        auto coeffs = f.expand_in(kVarT, depth);
        for (auto& c : coeffs) {
            c.reduce();
        }
        table.entries[i] = std::move(coeffs);
    });
    return table;
}

StabilizationReport stabilization_check(const OmegaPlusTable& table, int r, const LaurentPoly& idt_r_at_one)
{
    StabilizationReport rep;
    rep.r = r;
    rep.depth = table.depth;
    if (r < 1 || r > table.order) {
        throw std::invalid_argument("stabilization_check: rank outside the table");
    }
    const int depth = table.depth;
    // least d0 <= depth - r with E(d + r) == E(d) for all d in [d0, depth - r]
    int d0 = depth - r + 1;
    while (d0 - 1 >= 0 && d0 - 1 <= depth - r && table.at(r, d0 - 1 + r) == table.at(r, d0 - 1)) {
        --d0;
    }
    if (d0 > depth - r) {
        rep.detail = "no stable window within depth " + std::to_string(depth) + "; enlarge the depth";
        return rep;
    }
    rep.periodic = true;
    rep.d0 = d0;
    rep.constant = true;
    rep.matches = true;
    const Fraction target(idt_r_at_one);
    for (int d = d0; d <= depth; ++d) {
        if (!(table.at(r, d) == table.at(r, d0))) {
            rep.constant = false;
        }
        if (!(table.at(r, d) == target)) {
            rep.matches = false;
        }
    }
    rep.detail = "window [" + std::to_string(d0) + ", " + std::to_string(depth) + "]";
    return rep;
}

StabilizationReport stabilization_check(const CurveParams& cp, int r, int order, int depth)
{
    const OmegaPlusTable table = omega_plus(cp, order, depth);
    const LaurentPoly idt = idt_star(cp, r).at(static_cast<std::size_t>(r - 1));
    return stabilization_check(table, r, at_t_one(idt));
}

} // namespace higgsdt
