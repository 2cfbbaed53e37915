// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "higgsdt/verify.hpp"

using namespace higgsdt;

namespace {

struct Criterion {
    std::string name;
    std::function<CheckList()> run;
};

CheckList concat(std::initializer_list<CheckList> parts)
{
    CheckList out;
    for (const auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const std::vector<Criterion> criteria{
        {"integrality",
         [] {
             return concat({check_integrality(CurveParams::twisted(0, 1), 4),
                            check_integrality(CurveParams::twisted(0, 2), 4),
                            check_integrality(CurveParams::twisted(1, 1), 4),
                            check_integrality(CurveParams::twisted(2, 3), 3)});
         }},
        {"rank-one closed form", [] { return check_rank_one(3); }},
        {"genus-0 oracle equivalence",
         [] {
             CheckList out;
             for (int ell : {1, 2}) {
                 for (int q : {2, 3}) {
                     for (auto c : concat({check_oracle(1, 0, ell, q), check_oracle(1, 1, ell, q),
                                           check_oracle(2, 1, ell, q)})) {
                         out.push_back(std::move(c));
                     }
                 }
             }
             return out;
         }},
        {"stabilization",
         [] {
             return concat({check_stabilization(CurveParams::twisted(0, 1), 2, 8),
                            check_stabilization(CurveParams::twisted(1, 1), 2, 8)});
         }},
        {"alternative formulation",
         [] {
             return concat({check_alternative(CurveParams::twisted(0, 1), 4, 3),
                            check_alternative(CurveParams::twisted(1, 1), 4, 3),
                            check_alternative(CurveParams::twisted(2, 3), 4, 3)});
         }},
        {"combinatorial identities", [] { return check_combinatorics(6, 10); }},
        {"plethysm kernel", [] { return check_plethysm(100, 6); }},
        {"f-function properties", [] { return check_f_properties(2, 3, 2, 2); }},
        {"numeric specialization", [] { return check_specialize(2, {-2, -1, 0, 1, 2}); }},
        {"canonical mode", [] { return check_canonical(1); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        const CheckList checks = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = all_pass(checks) && !checks.empty();
        failed += ok ? 0 : 1;
        std::printf("%s  %-28s %3zu checks  %7.2fs\n", ok ? "PASS" : "FAIL", c.name.c_str(), checks.size(), secs);
        for (const auto& ch : checks) {
            if (verbose || !ch.pass) {
                std::printf("      %s %s %s\n", ch.pass ? "ok  " : "FAIL", ch.name.c_str(), ch.detail.c_str());
            }
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
