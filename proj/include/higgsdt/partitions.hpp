#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace higgsdt {

/// Integer partition stored as its weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is weakly decreasing and
    /// strictly positive.
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }

    /// 1-based part lambda_i; zero past the length.
    int part(int i) const noexcept
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Box (i, j) of a Young diagram: row i, column j, both 1-based.
struct Box {
    int row = 1;
    int col = 1;
    friend bool operator==(const Box&, const Box&) = default;
};

/// Box together with its arm and leg lengths.
struct HookBox {
    Box box;
    int arm = 0;
    int leg = 0;
    int hook() const noexcept { return arm + leg + 1; }
};

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& lambda);

bool contains(const Partition& lambda, Box s) noexcept;

// These throw std::domain_error for a box outside the diagram.
int arm(const Partition& lambda, Box s);
int leg(const Partition& lambda, Box s);
int hook(const Partition& lambda, Box s);

/// Boxes of the diagram, row-major.
std::vector<Box> boxes(const Partition& lambda);

/// Boxes with arm/leg precomputed, row-major.
std::vector<HookBox> hook_boxes(const Partition& lambda);

/// n(lambda) = sum of legs = sum_i (i-1) lambda_i.
int n_stat(const Partition& lambda) noexcept;

/// <lambda, lambda> = sum_j (lambda'_j)^2.
int norm_form(const Partition& lambda);

} // namespace higgsdt
