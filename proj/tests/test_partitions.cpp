#include <doctest.h>

#include <algorithm>
#include <set>

#include "higgsdt/partitions.hpp"

using namespace higgsdt;

namespace {

// Euler's pentagonal recurrence, independent of the enumerator.
std::vector<long> partition_numbers(int n)
{
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) {
                break;
            }
            const long sign = (k % 2 == 1) ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) {
                s += sign * p[static_cast<std::size_t>(m - g2)];
            }
        }
        p[static_cast<std::size_t>(m)] = s;
    }
    return p;
}

} // namespace

TEST_CASE("partition counts follow the pentagonal recurrence")
{
    const auto p = partition_numbers(20);
    for (int n = 0; n <= 20; ++n) {
        const auto parts = enumerate_partitions(n);
        CHECK(static_cast<long>(parts.size()) == p[static_cast<std::size_t>(n)]);
        std::set<Partition> distinct(parts.begin(), parts.end());
        CHECK(distinct.size() == parts.size());
        CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
        for (const auto& l : parts) {
            CHECK(l.weight() == n);
        }
    }
}

TEST_CASE("validation rejects bad parts")
{
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_NOTHROW(Partition({3, 3, 1}));
}

TEST_CASE("conjugation, arms and legs by direct box counting")
{
    for (int n = 0; n <= 10; ++n) {
        for (const auto& l : enumerate_partitions(n)) {
            const Partition c = conjugate(l);
            CHECK(conjugate(c) == l);
            CHECK(c.weight() == n);
            int legs = 0;
            for (const auto& hb : hook_boxes(l)) {
                int a = 0;
                while (contains(l, {hb.box.row, hb.box.col + a + 1})) {
                    ++a;
                }
                int g = 0;
                while (contains(l, {hb.box.row + g + 1, hb.box.col})) {
                    ++g;
                }
                CHECK(hb.arm == a);
                CHECK(hb.leg == g);
                CHECK(arm(l, hb.box) == a);
                CHECK(leg(l, hb.box) == g);
                CHECK(hook(l, hb.box) == a + g + 1);
                legs += g;
            }
            CHECK(n_stat(l) == legs);
            CHECK(norm_form(l) == n + 2 * n_stat(l));
        }
    }
}

TEST_CASE("boxes outside the diagram are rejected")
{
    const Partition l({2, 1});
    CHECK(boxes(l).size() == 3);
    CHECK_THROWS_AS(arm(l, {2, 2}), std::domain_error);
    CHECK_THROWS_AS(leg(l, {3, 1}), std::domain_error);
    CHECK(l.to_string() == "(2,1)");
    CHECK(Partition().to_string() == "()");
}
