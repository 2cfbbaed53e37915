#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace higgsdt {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::size_t kMaxVariables = 16;

/// Raised when an exact division leaves a remainder.
class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordered list of distinct variable names shared by every polynomial of a
/// computation.
class VariableTable {
public:
    explicit VariableTable(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const noexcept;
    /// Throws std::out_of_range for an unknown name.
    std::size_t index(std::string_view name) const;

    friend bool operator==(const VariableTable&, const VariableTable&) = default;

private:
    std::vector<std::string> names_;
};

using VarTable = std::shared_ptr<const VariableTable>;

/// q, t, a1..ag, z1..zn in that order; cached per (genus, z_count).
VarTable standard_table(int genus, int z_count = 0);

// Positions inside a standard table.
inline constexpr std::size_t kVarQ = 0;
inline constexpr std::size_t kVarT = 1;
inline constexpr std::size_t alpha_var(int i) noexcept { return 2 + static_cast<std::size_t>(i); }
inline constexpr std::size_t z_var(int genus, int j) noexcept
{
    return 2 + static_cast<std::size_t>(genus) + static_cast<std::size_t>(j);
}

/// Genus of a standard table, read off the a1, a2, ... names.
int table_genus(const VariableTable& table);

bool same_table(const VarTable& a, const VarTable& b) noexcept;

/// Exponent vector; unused slots stay zero. Ordered lexicographically in
/// variable-table order.
class Monomial {
public:
    using Exponent = std::int32_t;

    Monomial() = default;

    static Monomial variable(std::size_t index, Exponent e = 1) noexcept
    {
        Monomial m;
        m.exps_[index] = e;
        return m;
    }

    Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, Exponent e) noexcept { exps_[i] = e; }

    Monomial& operator*=(const Monomial& o) noexcept
    {
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            exps_[i] += o.exps_[i];
        }
        return *this;
    }
    Monomial& operator/=(const Monomial& o) noexcept
    {
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            exps_[i] -= o.exps_[i];
        }
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) noexcept { return a *= b; }
    friend Monomial operator/(Monomial a, const Monomial& b) noexcept { return a /= b; }

    Monomial pow(Exponent n) const noexcept
    {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            m.exps_[i] = exps_[i] * n;
        }
        return m;
    }
    Monomial inverse() const noexcept { return pow(-1); }

    bool is_one() const noexcept;
    /// Sign of the first nonzero exponent; 0 for the unit monomial.
    int leading_sign() const noexcept;
    /// gcd of all exponents (0 for the unit monomial).
    Exponent content() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::array<Exponent, kMaxVariables> exps_{};
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Image of every source variable under a monomial substitution.
struct MonomialMap {
    VarTable target;
    std::vector<Monomial> images;

    /// Identity on `table`.
    static MonomialMap identity(VarTable table);
    Monomial apply(const Monomial& m) const noexcept;
};

/// Exact multivariate Laurent polynomial over the rationals. Terms are kept
/// sorted by monomial with no zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    explicit LaurentPoly(VarTable vars);
    LaurentPoly(VarTable vars, std::vector<Term> terms); // canonicalizes

    static LaurentPoly constant(VarTable vars, const Rational& c);
    static LaurentPoly monomial(VarTable vars, const Monomial& m, const Rational& c = 1);
    static LaurentPoly variable(VarTable vars, std::string_view name, Monomial::Exponent e = 1);

    const VarTable& vars() const noexcept { return vars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool has_integer_coefficients() const noexcept;

    /// Coefficient of m (zero if absent).
    Rational coefficient(const Monomial& m) const;

    Monomial::Exponent min_exponent(std::size_t var) const;
    Monomial::Exponent max_exponent(std::size_t var) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly& operator*=(const Monomial& m);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(LaurentPoly a, const Monomial& m) { return a *= m; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// Product dropping every term whose exponent of `var` exceeds `max_degree`.
    static LaurentPoly multiply_truncated(const LaurentPoly& a, const LaurentPoly& b, std::size_t var,
                                          Monomial::Exponent max_degree);

    /// Adams operation: every exponent multiplied by n (n >= 1).
    LaurentPoly adams(int n) const;

    LaurentPoly substitute(const MonomialMap& map) const;

    /// Terms whose exponent of `var` equals e, with that exponent cleared.
    LaurentPoly slice(std::size_t var, Monomial::Exponent e) const;

    LaurentPoly pow(unsigned n) const;

    /// Exact evaluation; throws std::domain_error on a zero value raised to a
    /// negative power.
    Rational evaluate(std::span<const Rational> point) const;
    std::complex<long double> evaluate(std::span<const std::complex<long double>> point) const;

private:
    void canonicalize();

    VarTable vars_;
    std::vector<Term> terms_;
};

/// Binomial m1 - m2 with m1 > m2 in the monomial order. Constructing from an
/// arbitrary ordered pair records the orientation sign so that
/// (a - b) == sign() * (leading() - trailing()).
class BinomialFactor {
public:
    BinomialFactor(const Monomial& a, const Monomial& b);

    const Monomial& leading() const noexcept { return lead_; }
    const Monomial& trailing() const noexcept { return trail_; }
    int sign() const noexcept { return sign_; }

    /// leading - trailing as a polynomial (orientation sign not applied).
    LaurentPoly expand(const VarTable& vars) const;

    friend bool operator==(const BinomialFactor& a, const BinomialFactor& b)
    {
        return a.lead_ == b.lead_ && a.trail_ == b.trail_;
    }
    friend auto operator<=>(const BinomialFactor& a, const BinomialFactor& b)
    {
        if (auto c = a.lead_ <=> b.lead_; c != 0) {
            return c;
        }
        return a.trail_ <=> b.trail_;
    }

private:
    Monomial lead_;
    Monomial trail_;
    int sign_ = 1;
};

/// Quotient p / (leading - trailing); throws NotDivisible on a remainder.
LaurentPoly exact_divide(const LaurentPoly& p, const BinomialFactor& f);

/// Exact division by c(x) = sum_j coeffs[j] x^j for a monomial direction x
/// with positive leading exponent. coeffs.front() and coeffs.back() must be
/// nonzero. Returns nullopt when a remainder is left.
std::optional<LaurentPoly> try_divide_along(const LaurentPoly& p, const Monomial& x,
                                            std::span<const Rational> coeffs);

} // namespace higgsdt
