#pragma once

#include <string>
#include <vector>

#include "higgsdt/dt_formulas.hpp"

namespace higgsdt {

/// f(z_1, ..., z_n) with every z_i replaced by the given monomial. Each
/// permutation term is specialized before the terms are summed. Throws
/// std::domain_error if a specialized denominator vanishes.
Fraction f_specialized(const std::vector<Monomial>& z, int genus, const VarTable& vars);

/// f over the table standard_table(genus, n) with symbolic z_1..z_n.
Fraction f_symbolic(int n, int genus);

/// f at z_i = q^{i-n} t^{lambda_i}; requires n >= l(lambda).
Fraction f_lambda(const Partition& lambda, const CurveParams& cp, int n);

/// f(1, z_1..z_n) == f(q z_1, ..., q z_n).
bool inductive_property_check(int n, int genus);
/// f times prod_k (prod_i (1 - z_i / a_k) prod_{i != j} (1 - q z_i / (a_k z_j)))
/// clears to a Laurent polynomial.
bool laurent_property_check(int n, int genus);
/// f = 1 after setting every 1/a_k = 0.
bool alpha_limit_check(int n, int genus);

/// Positive series with T rescaled by q^{-p/2}.
TruncSeries zplus_series(const CurveParams& cp, int order);

/// entries[r - 1][d]: t^d coefficient of (q - 1) * (Log Z+)_r, normalized by
/// q^{-pr/2}.
struct OmegaPlusTable {
    int order = 0;
    int depth = 0;
    std::vector<std::vector<Fraction>> entries;

    const Fraction& at(int r, int d) const
    {
        return entries.at(static_cast<std::size_t>(r - 1)).at(static_cast<std::size_t>(d));
    }
};

OmegaPlusTable omega_plus(const CurveParams& cp, int order, int depth);

struct StabilizationReport {
    int r = 0;
    int depth = 0;
    bool periodic = false; // a window [d0, depth] with period r was found
    int d0 = -1;
    bool constant = false; // the window entries all agree
    bool matches = false;  // and equal IDT_r(q, 1)
    std::string detail;
};

StabilizationReport stabilization_check(const OmegaPlusTable& table, int r, const LaurentPoly& idt_r_at_one);
StabilizationReport stabilization_check(const CurveParams& cp, int r, int order, int depth);

} // namespace higgsdt
