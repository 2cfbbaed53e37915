#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "higgsdt/dt_formulas.hpp"

namespace higgsdt {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

using CheckList = std::vector<CheckResult>;

bool all_pass(const CheckList& checks);

/// N_lambda conjugation symmetry for |lambda| <= conj_max and
/// <lambda, lambda> = 2 n(lambda) + |lambda| for |lambda| <= form_max.
CheckList check_combinatorics(int conj_max = 6, int form_max = 10);

/// Exp/Log round trip and Exp additivity on random series, plus
/// psi_m psi_n = psi_mn.
CheckList check_plethysm(int trials = 100, int order = 6, std::uint32_t seed = 20240607);

/// Inductive property for n <= inductive_max, f = 1 at 1/a = 0 for
/// n <= limit_max, Laurent clearing for n <= laurent_max; each at every genus
/// in 0..max_genus.
CheckList check_f_properties(int inductive_max = 2, int limit_max = 3, int laurent_max = 2, int max_genus = 1);

/// IDT_1..IDT_rmax clear to integral Laurent polynomials, Weyl invariant at t = 1.
CheckList check_integrality(const CurveParams& cp, int rmax);

/// IDT_1 = (-1)^p prod (1 - t/a_i)(q - a_i) for every genus <= max_genus.
CheckList check_rank_one(int max_genus = 3);

/// Substitution identity for |lambda| <= max_weight and agreement of the two
/// pipelines at t = 1 for r <= rmax.
CheckList check_alternative(const CurveParams& cp, int max_weight, int rmax);

/// Positive-series stabilization for r <= rmax at depth D.
CheckList check_stabilization(const CurveParams& cp, int rmax, int depth);

/// Brute-force stack volume on the projective line against the formula.
CheckList check_oracle(int r, int d, int ell, int q);

/// Numeric specialization of IDT_1(q, 1) at genus one from Frobenius traces.
CheckList check_specialize(long q0, const std::vector<long>& traces, int ell = 1);

/// Canonical mode at rank one equals the point-count polynomial.
CheckList check_canonical(int genus = 1);

} // namespace higgsdt
