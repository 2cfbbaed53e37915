#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "higgsdt/laurent.hpp"

namespace higgsdt {

/// Field with q elements for q prime (< 64) or q in {4, 8, 9}. Elements are
/// encoded as 0..q-1 (base-p digits of a polynomial residue); 0 and 1 are the
/// additive and multiplicative identities.
class FiniteField {
public:
    explicit FiniteField(int q); // throws std::invalid_argument if unsupported

    int order() const noexcept { return q_; }
    int characteristic() const noexcept { return p_; }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * q_ + b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint8_t a) const noexcept { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const; // throws std::domain_error for 0

    static bool supported(int q) noexcept;

private:
    int q_;
    int p_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
};

/// Degrees a_1 >= ... >= a_r of a split bundle on the projective line.
struct SplittingType {
    std::vector<int> degrees;

    int rank() const noexcept { return static_cast<int>(degrees.size()); }
    int degree() const noexcept;
    int spread() const noexcept { return degrees.empty() ? 0 : degrees.front() - degrees.back(); }
    std::string to_string() const;
};

/// Order of Aut(O(a_1) + ... + O(a_r)) over F_q.
Integer aut_count(const SplittingType& type, int q);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 28;

/// Semistable Higgs fields phi: E -> E(l) on the split bundle E (rank <= 2).
/// Throws std::length_error when q^dim exceeds the cap.
Integer semistable_count(const SplittingType& type, int ell, int q, std::uint64_t cap = kDefaultEnumerationCap);

struct StackVolume {
    Rational volume;
    int spread_bound = 0;
    bool boundary_vanishes = true; // types just past the bound contribute nothing
    std::vector<std::pair<SplittingType, Rational>> contributions;
};

/// sum over splitting types of semistable_count / aut_count (rank <= 2, l >= 1).
StackVolume stack_volume_p1(int r, int d, int ell, int q, std::uint64_t cap = kDefaultEnumerationCap);

struct OracleComparison {
    Rational oracle;
    Rational formula;
    bool equal = false;
    StackVolume detail;
};

/// Brute-force volume against (-1)^{l r^2} q^{(l r^2 + p r)/2} IDT_r(q, 1) / (q - 1)
/// at genus 0; requires gcd(r, d) = 1.
OracleComparison compare_with_formula(int r, int d, int ell, int q, std::uint64_t cap = kDefaultEnumerationCap);

} // namespace higgsdt
