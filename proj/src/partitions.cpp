#include "higgsdt/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace higgsdt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

namespace {

void extend(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, cap); k >= 1; --k) {
        prefix.push_back(k);
        extend(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0) {
        throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend(n, n, prefix, out);
    return out;
}

Partition conjugate(const Partition& lambda)
{
    if (lambda.empty()) {
        return {};
    }
    std::vector<int> cols(static_cast<std::size_t>(lambda.part(1)), 0);
    for (int part : lambda.parts()) {
        for (int j = 0; j < part; ++j) {
            ++cols[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(cols));
}

bool contains(const Partition& lambda, Box s) noexcept
{
    return s.row >= 1 && s.col >= 1 && s.col <= lambda.part(s.row);
}

namespace {

int column_height(const Partition& lambda, int col)
{
    int h = 0;
    while (h < lambda.length() && lambda.part(h + 1) >= col) {
        ++h;
    }
    return h;
}

void require_box(const Partition& lambda, Box s)
{
    if (!contains(lambda, s)) {
        throw std::domain_error("box (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                                ") is outside the diagram of " + lambda.to_string());
    }
}

} // namespace

int arm(const Partition& lambda, Box s)
{
    require_box(lambda, s);
    return lambda.part(s.row) - s.col;
}

int leg(const Partition& lambda, Box s)
{
    require_box(lambda, s);
    return column_height(lambda, s.col) - s.row;
}

int hook(const Partition& lambda, Box s) { return arm(lambda, s) + leg(lambda, s) + 1; }

std::vector<Box> boxes(const Partition& lambda)
{
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(lambda.weight()));
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

std::vector<HookBox> hook_boxes(const Partition& lambda)
{
    const Partition conj = conjugate(lambda);
    std::vector<HookBox> out;
    out.reserve(static_cast<std::size_t>(lambda.weight()));
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            out.push_back({{i, j}, lambda.part(i) - j, conj.part(j) - i});
        }
    }
    return out;
}

int n_stat(const Partition& lambda) noexcept
{
    int n = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        n += (i - 1) * lambda.part(i);
    }
    return n;
}

int norm_form(const Partition& lambda)
{
    int s = 0;
    const Partition c_lambda = conjugate(lambda);
    for (int c : c_lambda.parts()) {
        s += c * c;
    }
    return s;
}

} // namespace higgsdt
