#pragma once

#include "symqt/diffop.hpp"
#include "symqt/json_io.hpp"

namespace symqt {

constexpr uint64_t kDefaultSeed = 20240501;

/// Outcome of one verification suite.  Failures always carry a concrete
/// counterexample (offending monomial and the two coefficient values, or an
/// equivalent witness).
struct SuiteReport {
    std::string suite;
    json params = json::object();
    bool pass = true;
    json counterexample;  // null unless failed
    long millis = 0;

    SuiteReport() = default;
    explicit SuiteReport(std::string name) : suite(std::move(name)) {}

    json to_json() const;
    void fail(json witness);
};

/// Expansion of a polynomial in the inhomogeneous interpolation basis
/// {I_{mu|N}}; peels degree by degree (each homogeneous top is expanded in
/// Macdonald P, which matches the top terms of I).
std::map<Partition, PolyQT> expand_in_interp_basis(const PolyQT& f, int N);

// Identity suites.  Parameters follow the desk-scale defaults when callers
// pass nothing else.
SuiteReport verify_oracle_equivalence(int max_mu = 5, int max_N = 3);
SuiteReport verify_vanishing(int max_mu = 5, int max_N = 3, int extra = 3);
SuiteReport verify_quasi_stability(int max_mu = 5, int max_N = 3, int max_mu_hl = 4);
SuiteReport verify_cauchy_qt(int N, int K, int x_cutoff, int u_cutoff);
SuiteReport verify_one_row_gf(int N, int u_cutoff);
SuiteReport verify_skew_pieri(int N, const Partition& nu, int y_order);
SuiteReport verify_finite_pieri(int N, int m, const Partition& nu);
SuiteReport verify_eigen(uint64_t seed = kDefaultSeed, int points = 3, bool run_symbolic = true,
                         bool run_eval = true);
SuiteReport verify_kernel_intertwining(int N = 2, int order = 4);
SuiteReport verify_jack_suite(int N = 2, int cutoff = 4);
SuiteReport verify_whittaker(int N, int K, int cutoff);
SuiteReport verify_hl(int N, int K, int order, uint64_t seed = kDefaultSeed);
SuiteReport verify_biorthogonality(int D = 4);
SuiteReport verify_binomial_suite(int max_N = 2, int max_mu = 4);
SuiteReport verify_tq_determinant(int max_N = 3, int max_mu = 4, int cauchy_order = 4);
SuiteReport verify_dual_oracle(int max_nu = 4, int max_K = 3, int order = 4);

/// Every suite at the desk-scale profile; deterministic order, optionally
/// spread over `threads` workers.
std::vector<SuiteReport> verify_all(uint64_t seed = kDefaultSeed, int threads = 1);

}  // namespace symqt
