// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Run with no arguments for all criteria, or pass criterion
// numbers (1..11).

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hypermoment/checks.hpp"

namespace hm = hypermoment;
using hm::checks::CheckResult;

namespace {

struct Criterion {
    int id;
    const char* title;
    CheckResult (*run)();
};

CheckResult run_1() { return hm::checks::check_gauss_jacobi_suite(200); }
CheckResult run_2() { return hm::checks::check_cross_agreement(300); }
CheckResult run_3() { return hm::checks::check_algebraic_formulas(300, 1000); }
CheckResult run_4() { return hm::checks::check_transformations(500); }
CheckResult run_5() { return hm::checks::check_trace_nulls(200); }
CheckResult run_6() { return hm::checks::check_trace_eta_oracles(150, 200); }
CheckResult run_7() { return hm::checks::check_cross_formula(150); }
CheckResult run_8() { return hm::checks::check_exact_moments(300, 1000, 300); }
CheckResult run_9() { return hm::checks::check_convergence(3100, 0.25); }
CheckResult run_10() { return hm::checks::check_combinatorics(); }
CheckResult run_11() { return hm::checks::check_performance(10007, 1999, 50.0); }

const std::vector<Criterion> criteria = {
    {1, "Gauss/Jacobi identity suite, p <= 200", run_1},
    {2, "evaluation cross-agreement (charsum/dft/curve), p <= 300", run_2},
    {3, "algebraic closed forms vs charsum + lambda=1 specials", run_3},
    {4, "transformation identities, p <= 500", run_4},
    {5, "trace formulas: exact null tests on zero-dimensional spaces", run_5},
    {6, "trace formulas: eta-product eigenvalue oracles, p <= 150", run_6},
    {7, "cross-formula equality at even weights, p <= 150", run_7},
    {8, "exact first/odd/second moment identities", run_8},
    {9, "moment convergence sweeps to p >= 3000", run_9},
    {10, "combinatorics: Catalan, convolution identity, O_3 moments", run_10},
    {11, "batch DFT >= 50x faster than the naive loop at p = 10007", run_11},
};

int run_one(const Criterion& c) {
    CheckResult r;
    try {
        r = c.run();
    } catch (const std::exception& e) {
        r.pass = false;
        r.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("[criterion %2d] %s  %s\n", c.id, r.pass ? "PASS" : "FAIL", c.title);
    for (const std::string& n : r.notes) std::printf("               note: %s\n", n.c_str());
    if (r.instances > 0) std::printf("               instances checked: %lld\n",
                                     static_cast<long long>(r.instances));
    for (const std::string& f : r.failures) std::printf("               failure: %s\n", f.c_str());
    std::fflush(stdout);
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    int failures = 0;
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) {
            int id = std::atoi(argv[i]);
            bool found = false;
            for (const Criterion& c : criteria)
                if (c.id == id) {
                    failures += run_one(c);
                    found = true;
                }
            if (!found) {
                std::fprintf(stderr, "unknown criterion: %s\n", argv[i]);
                return 64;
            }
        }
    } else {
        for (const Criterion& c : criteria) failures += run_one(c);
    }
    return failures;
}
