#pragma once

#include <complex>
#include <vector>

#include "higgsdt/laurent.hpp"

namespace higgsdt {

using Complex = std::complex<long double>;

/// Weil numbers of a curve, either symbolic (the a1..ag variables) or numeric.
struct ZetaData {
    int genus = 0;
    bool symbolic = true;
    long q0 = 0;
    std::vector<Complex> weil;

    static ZetaData symbolic_data(int genus);
    /// Throws std::invalid_argument unless |a_i| = sqrt(q0) and the multiset is
    /// closed under a -> q0 / a, both within tol.
    static ZetaData numeric(long q0, std::vector<Complex> weil, long double tol = 1e-9L);
    /// Genus one from the Frobenius trace: roots of x^2 - a x + q0. Rejects
    /// |a| > 2 sqrt(q0).
    static ZetaData from_trace(long q0, long trace);
};

/// t-coefficients of Z_X(t) = prod (1 - a_i t)(1 - q a_i^{-1} t) / ((1 - t)(1 - q t)).
std::vector<LaurentPoly> zx_series(int genus, int order);
std::vector<Complex> zx_series(const ZetaData& zd, int order);

/// Finite prefix (a_1, ..., a_N) of a counting sequence.
struct CountingSequence {
    std::vector<Complex> values;

    std::size_t size() const noexcept { return values.size(); }
    const Complex& operator[](std::size_t n) const { return values.at(n - 1); }
    /// (a_m, a_2m, ...) truncated to floor(N / m) entries.
    CountingSequence adams(int m) const;
};

/// #X(F_{q0^n}) for n = 1..N.
CountingSequence point_counts(const ZetaData& zd, int n_max);

/// Entry n: x evaluated at q = q0^n, a_i = w_i^n. x must not involve t or z.
CountingSequence counting_sequence(const LaurentPoly& x, const ZetaData& zd, int n_max);

/// x at (q0, w) rounded to an integer after checking Weyl invariance; throws
/// std::domain_error when x is not invariant or the residual exceeds tol.
long long specialize_integer(const LaurentPoly& x, const ZetaData& zd, long double tol = 1e-6L);

} // namespace higgsdt
