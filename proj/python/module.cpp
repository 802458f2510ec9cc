// Python bindings: the main compute operations and the verification suites,
// returning JSON strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symqt/suites.hpp"

namespace py = pybind11;
using namespace symqt;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

std::string compute_macdonald(const std::vector<int>& mu, int n, const std::string& basis) {
    Partition p = to_partition(mu);
    PolyQT poly = basis == "Q" ? macdonald_Q(p, n) : macdonald_P(p, n);
    return poly_to_json(poly, var_names("x", n)).dump();
}

std::string compute_interp(const std::vector<int>& mu, int n) {
    return poly_to_json(interp_I(to_partition(mu), n), var_names("x", n)).dump();
}

std::string compute_jack(const std::vector<int>& mu, int n) {
    return poly_to_json(jack_interp_I(to_partition(mu), n), var_names("x", n)).dump();
}

std::string compute_whittaker(const std::vector<int>& mu, int n) {
    return poly_to_json(whittaker_A(to_partition(mu), n), var_names("x", n)).dump();
}

std::string compute_hl(const std::vector<int>& mu, int n) {
    return poly_to_json(hl_A(to_partition(mu), n), var_names("x", n)).dump();
}

std::string compute_dual(const std::vector<int>& mu, int k, const std::string& family) {
    Partition p = to_partition(mu);
    if (family == "jack") return ratfn_to_json(dual_H_jack(p, k), var_names("u", k)).dump();
    DualFamily fam = DualFamily::QT;
    if (family == "whittaker") fam = DualFamily::Whittaker;
    else if (family == "hl") fam = DualFamily::HallLittlewood;
    else if (family != "qt") throw py::value_error("family must be qt|jack|whittaker|hl");
    return ratfn_to_json(dual_H(p, k, fam), var_names("u", k)).dump();
}

std::string compute_nodes(const std::vector<int>& lam, int n) {
    json arr = json::array();
    for (const auto& c : node(to_partition(lam), n)) arr.push_back(to_json(c));
    return arr.dump();
}

std::string run_suite(const std::string& name, int n, int k, int cutoff, uint64_t seed) {
    if (name == "cauchy") return verify_cauchy_qt(n, k, cutoff, cutoff).to_json().dump();
    if (name == "one-row") return verify_one_row_gf(n, cutoff).to_json().dump();
    if (name == "eigen") return verify_eigen(seed, 3, true, true).to_json().dump();
    if (name == "jack") return verify_jack_suite(n, cutoff).to_json().dump();
    if (name == "whittaker") return verify_whittaker(n, k, cutoff).to_json().dump();
    if (name == "hl") return verify_hl(n, k, cutoff, seed).to_json().dump();
    if (name == "biorth") return verify_biorthogonality(cutoff).to_json().dump();
    if (name == "binomial") return verify_binomial_suite(n, cutoff).to_json().dump();
    if (name == "tq-determinant") return verify_tq_determinant(n, cutoff, 4).to_json().dump();
    if (name == "dual-oracle") return verify_dual_oracle(cutoff, k, cutoff).to_json().dump();
    if (name == "kernel") return verify_kernel_intertwining(n, cutoff).to_json().dump();
    throw py::value_error("unknown suite: " + name);
}

std::string run_all(uint64_t seed, int threads) {
    json arr = json::array();
    for (const auto& r : verify_all(seed, threads)) arr.push_back(r.to_json());
    return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Macdonald / interpolation polynomial computations over Q(q,t)";

    m.def("macdonald", &compute_macdonald, py::arg("mu"), py::arg("n"), py::arg("basis") = "P",
          "Macdonald polynomial in n variables as JSON");
    m.def("interpolation", &compute_interp, py::arg("mu"), py::arg("n"),
          "interpolation Macdonald polynomial as JSON");
    m.def("jack_interpolation", &compute_jack, py::arg("mu"), py::arg("n"));
    m.def("whittaker", &compute_whittaker, py::arg("mu"), py::arg("n"));
    m.def("hall_littlewood", &compute_hl, py::arg("mu"), py::arg("n"));
    m.def("dual", &compute_dual, py::arg("mu"), py::arg("k"), py::arg("family") = "qt",
          "dual rational function as JSON");
    m.def("nodes", &compute_nodes, py::arg("lam"), py::arg("n"), "interpolation node as JSON");
    m.def("verify", &run_suite, py::arg("suite"), py::arg("n") = 2, py::arg("k") = 2,
          py::arg("cutoff") = 4, py::arg("seed") = kDefaultSeed,
          "run one verification suite, returns a JSON report");
    m.def("verify_all", &run_all, py::arg("seed") = kDefaultSeed, py::arg("threads") = 1,
          "run the whole desk-scale verification profile");
}
