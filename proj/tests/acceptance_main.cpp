// Acceptance suite: one line per criterion, exact checks only.
#include <chrono>
#include <cstdio>
#include <vector>

#include "symqt/suites.hpp"

using namespace symqt;

namespace {

int failures = 0;

void report(int idx, const char* what, bool pass, long ms, long limit_ms = 0) {
    bool ok = pass && (limit_ms == 0 || ms <= limit_ms);
    if (!ok) ++failures;
    std::printf("%s criterion-%02d: %s (%ld ms%s)\n", ok ? "PASS" : "FAIL", idx, what, ms,
                limit_ms ? (ms <= limit_ms ? ", within limit" : ", OVER LIMIT") : "");
    std::fflush(stdout);
}

template <class F>
std::pair<bool, long> timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    bool ok = f();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    return {ok, ms};
}

bool all_pass(const std::vector<SuiteReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace

int main() {
    const uint64_t seed = kDefaultSeed;

    {
        auto [ok, ms] = timed([] { return verify_oracle_equivalence(5, 3).pass; });
        report(1, "combinatorial Macdonald P equals Gram-Schmidt oracle, |mu|<=5, N<=3", ok, ms,
               60000);
    }
    {
        auto [ok, ms] = timed([] { return verify_vanishing(5, 3, 3).pass; });
        report(2, "vanishing + extra vanishing at interpolation nodes, |mu|<=5, N<=3", ok, ms,
               120000);
    }
    {
        auto [ok, ms] = timed([] { return verify_quasi_stability(5, 3, 4).pass; });
        report(3, "quasi-stability (qt, |mu|<=5) and hall-littlewood quasi-stability (|mu|<=4)", ok,
               ms);
    }
    {
        auto [ok, ms] = timed([] { return verify_tq_determinant(3, 4, 4).pass; });
        report(4, "equal-parameter determinantal identities + sigma stability, N<=3, |mu|<=4", ok,
               ms);
    }
    {
        auto [ok, ms] = timed([] {
            return verify_cauchy_qt(1, 1, 5, 5).pass && verify_cauchy_qt(1, 2, 5, 5).pass &&
                   verify_cauchy_qt(2, 2, 5, 5).pass;
        });
        report(5, "truncated Cauchy identity, (N,K) in {(1,1),(1,2),(2,2)}, cutoffs (5,5)", ok, ms,
               300000);
    }
    {
        auto [ok, ms] = timed([] {
            return verify_one_row_gf(1, 5).pass && verify_one_row_gf(2, 5).pass &&
                   verify_one_row_gf(3, 5).pass;
        });
        report(6, "one-row generating function, N<=3, cutoff 5", ok, ms);
    }
    {
        auto [ok, ms] = timed([seed] { return verify_eigen(seed, 3, true, true).pass; });
        report(7, "eigen-relations (symbolic N<=2, seeded N=3), equal-parameter case, commutativity",
               ok, ms);
    }
    {
        auto [ok, ms] = timed([] { return verify_dual_oracle(4, 3, 4).pass; });
        report(8, "duality-solve oracle equals combinatorial dual, |nu|<=4, K<=3, order 4", ok, ms);
    }
    {
        auto [ok, ms] = timed([] {
            for (int N = 1; N <= 2; ++N)
                for (const Partition& nu : partitions_up_to(2, N)) {
                    if (!verify_skew_pieri(N, nu, 4).pass) return false;
                    for (int m = 1; m <= 2; ++m)
                        if (!verify_finite_pieri(N, m, nu).pass) return false;
                }
            return true;
        });
        report(9, "skew and finite Pieri expansions in the interpolation basis, N<=2", ok, ms);
    }
    {
        auto [ok, ms] = timed([] { return verify_jack_suite(2, 4).pass; });
        report(10, "Jack limit: Cauchy identity, alternative kernel, shift relations, eigen", ok,
               ms);
    }
    {
        auto [ok, ms] = timed([seed] {
            return verify_whittaker(1, 1, 4).pass && verify_whittaker(2, 2, 4).pass &&
                   verify_hl(1, 1, 4, seed).pass && verify_hl(2, 2, 4, seed).pass;
        });
        report(11, "q-Whittaker and Hall-Littlewood Cauchy identities, N,K<=2", ok, ms);
    }
    {
        auto [ok, ms] = timed([] { return verify_biorthogonality(4).pass; });
        report(12, "biorthogonality <I_mu, H_nu> = delta up to degree 4", ok, ms);
    }
    {
        auto [ok, ms] = timed([seed] { return all_pass(verify_all(seed, 1)); });
        report(13, "full desk-scale run, single-threaded", ok, ms, 600000);
    }

    if (failures) {
        std::printf("%d criteria FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
