// Command line front end: compute individual polynomials / rational functions
// as JSON, and run the identity verification suites.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "symqt/suites.hpp"

using namespace symqt;

namespace {

int threads_from_env(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("SYMFUNC_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

DualFamily parse_family(const std::string& name) {
    if (name == "qt") return DualFamily::QT;
    if (name == "jack") return DualFamily::Jack;
    if (name == "whittaker") return DualFamily::Whittaker;
    if (name == "hl") return DualFamily::HallLittlewood;
    throw CLI::ValidationError("--family must be one of qt|jack|whittaker|hl");
}

int run_compute(const std::string& what, const std::string& mu_str, int N, int K,
                const std::string& family, const std::string& basis) {
    Partition mu = parse_partition(mu_str);
    json out;
    if (what == "macdonald") {
        PolyQT p = basis == "Q" ? macdonald_Q(mu, N) : macdonald_P(mu, N);
        out = poly_to_json(p, var_names("x", N));
    } else if (what == "interp") {
        out = poly_to_json(interp_I(mu, N), var_names("x", N));
    } else if (what == "jack") {
        out = poly_to_json(jack_interp_I(mu, N), var_names("x", N));
    } else if (what == "whittaker") {
        out = poly_to_json(whittaker_A(mu, N), var_names("x", N));
    } else if (what == "hl") {
        out = poly_to_json(hl_A(mu, N), var_names("x", N));
    } else if (what == "dual") {
        int vars = K > 0 ? K : N;
        DualFamily fam = parse_family(family);
        if (fam == DualFamily::Jack)
            out = ratfn_to_json(dual_H_jack(mu, vars), var_names("u", vars));
        else
            out = ratfn_to_json(dual_H(mu, vars, fam), var_names("u", vars));
    } else if (what == "sigma") {
        std::vector<ScalarQT> c;  // c_n = q^{N-n-1}, n >= 1
        for (int n = 1; n < mu.part(1) + N + 1; ++n) c.push_back(qt_q(N - 1 - n));
        out = ratfn_to_json(dual_sigma(mu, N, c), var_names("u", N));
    } else {
        throw CLI::ValidationError("unknown compute target: " + what);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& which, int N, int K, int cutoff, uint64_t seed, int points,
               const std::string& mode, const std::string& nu_str, int m, int threads) {
    std::vector<SuiteReport> reports;
    Partition nu = parse_partition(nu_str);
    if (which == "cauchy") {
        reports.push_back(verify_cauchy_qt(N, K > 0 ? K : N, cutoff, cutoff));
    } else if (which == "one-row") {
        reports.push_back(verify_one_row_gf(N, cutoff));
    } else if (which == "skew-pieri") {
        reports.push_back(verify_skew_pieri(N, nu, cutoff));
    } else if (which == "finite-pieri") {
        reports.push_back(verify_finite_pieri(N, m, nu));
    } else if (which == "eigen") {
        bool symbolic = mode == "symbolic" || mode == "both";
        bool eval = mode == "eval" || mode == "both";
        reports.push_back(verify_eigen(seed, points, symbolic, eval));
    } else if (which == "kernel") {
        reports.push_back(verify_kernel_intertwining(N, cutoff));
    } else if (which == "jack") {
        reports.push_back(verify_jack_suite(N, cutoff));
    } else if (which == "whittaker") {
        reports.push_back(verify_whittaker(N, K > 0 ? K : N, cutoff));
    } else if (which == "hl") {
        reports.push_back(verify_hl(N, K > 0 ? K : N, cutoff, seed));
    } else if (which == "biorth") {
        reports.push_back(verify_biorthogonality(cutoff));
    } else if (which == "binomial") {
        reports.push_back(verify_binomial_suite(N, cutoff));
    } else if (which == "tq-determinant") {
        reports.push_back(verify_tq_determinant(N, cutoff, 4));
    } else if (which == "oracle") {
        reports.push_back(verify_oracle_equivalence(cutoff, N));
    } else if (which == "vanishing") {
        reports.push_back(verify_vanishing(cutoff, N, 3));
    } else if (which == "quasi-stability") {
        reports.push_back(verify_quasi_stability(cutoff, N, std::max(cutoff - 1, 1)));
    } else if (which == "dual-oracle") {
        reports.push_back(verify_dual_oracle(cutoff, K > 0 ? K : 3, cutoff));
    } else if (which == "all") {
        reports = verify_all(seed, threads);
    } else {
        throw CLI::ValidationError("unknown suite: " + which);
    }
    json out = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        out.push_back(r.to_json());
        ok = ok && r.pass;
    }
    std::cout << (reports.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Macdonald / interpolation polynomial calculator and identity checker"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute one object and print JSON");
    std::string what, mu_str = "[]", family = "qt", basis = "P", format = "json";
    int cN = 1, cK = 0;
    compute->add_option("target", what, "macdonald|interp|dual|sigma|jack|whittaker|hl")->required();
    compute->add_option("--mu", mu_str, "partition, e.g. 2,1");
    compute->add_option("--n", cN, "number of variables")->check(CLI::PositiveNumber);
    compute->add_option("--k", cK, "dual variable count (defaults to --n)");
    compute->add_option("--family", family, "qt|jack|whittaker|hl");
    compute->add_option("--basis", basis, "P|Q (macdonald only)");
    compute->add_option("--format", format)->check(CLI::IsMember({"json"}));

    // nodes
    auto* nodes_cmd = app.add_subcommand("nodes", "interpolation node of a partition");
    std::string lam_str = "[]";
    int nN = 1;
    nodes_cmd->add_option("--lambda", lam_str, "partition");
    nodes_cmd->add_option("--n", nN, "number of coordinates")->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string which, mode = "both", nu_str = "[]", profile = "desk";
    int vN = 2, vK = 0, cutoff = 4, points = 3, m = 1, threads_flag = 0;
    uint64_t seed = kDefaultSeed;
    verify->add_option("suite", which,
                       "cauchy|one-row|skew-pieri|finite-pieri|eigen|jack|whittaker|hl|biorth|"
                       "binomial|tq-determinant|kernel|oracle|vanishing|quasi-stability|dual-oracle|all")
        ->required();
    verify->add_option("--n", vN);
    verify->add_option("--k", vK);
    verify->add_option("--cutoff", cutoff);
    verify->add_option("--seed", seed);
    verify->add_option("--points", points);
    verify->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "eval", "both"}));
    verify->add_option("--nu", nu_str, "partition for the Pieri suites");
    verify->add_option("--m", m, "column bound for the finite Pieri suite");
    verify->add_option("--profile", profile)->check(CLI::IsMember({"desk"}));
    verify->add_option("--threads", threads_flag, "overrides SYMFUNC_THREADS");

    // bench
    auto* bench = app.add_subcommand("bench", "time one suite");
    std::string bsuite;
    bench->add_option("--suite", bsuite, "suite name as in verify")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return run_compute(what, mu_str, cN, cK, family, basis);
        if (nodes_cmd->parsed()) {
            Partition lam = parse_partition(lam_str);
            json arr = json::array();
            for (const auto& c : node(lam, nN)) arr.push_back(to_json(c));
            std::cout << arr.dump(2) << "\n";
            return 0;
        }
        if (verify->parsed())
            return run_verify(which, vN, vK, cutoff, seed, points, mode, nu_str, m,
                              threads_from_env(threads_flag));
        if (bench->parsed()) {
            int rc = run_verify(bsuite, 2, 2, 4, kDefaultSeed, 3, "both", "[]", 1, 1);
            return rc;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
