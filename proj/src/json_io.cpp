#include "symqt/json_io.hpp"

#include <sstream>

namespace symqt {

namespace {

json bipoly_terms_qt(const BiPoly& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.terms()) arr.push_back({k[0], k[1], c.str()});
    return arr;
}

json bipoly_terms_kappa(const BiPoly& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.terms()) arr.push_back({k[0], c.str()});
    return arr;
}

}  // namespace

json to_json(const ScalarQT& s) {
    return json{{"num", bipoly_terms_qt(s.num())}, {"den", bipoly_terms_qt(s.den())}};
}

json to_json(const ScalarKappa& s) {
    return json{{"num", bipoly_terms_kappa(s.num())}, {"den", bipoly_terms_kappa(s.den())}};
}

json to_json(const Partition& mu) {
    json arr = json::array();
    for (int p : mu.parts()) arr.push_back(p);
    return arr;
}

namespace {

template <class S>
json poly_terms(const MultiPoly<S>& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({{"exp", e}, {"coef", to_json(c)}});
    return arr;
}

}  // namespace

json poly_to_json(const PolyQT& p, const std::vector<std::string>& names) {
    return json{{"vars", names}, {"terms", poly_terms(p)}};
}

json poly_to_json(const PolyKappa& p, const std::vector<std::string>& names) {
    return json{{"vars", names}, {"terms", poly_terms(p)}};
}

json series_to_json(const SeriesQT& s, const std::vector<std::string>& names) {
    json j{{"vars", names}, {"terms", json::array()}};
    if (s.nx() > 0 && s.nu() > 0) {
        j["cutoff_x"] = s.cutoff_x();
        j["cutoff_u"] = s.cutoff_u();
    } else {
        j["cutoff"] = s.nx() > 0 ? s.cutoff_x() : s.cutoff_u();
    }
    for (const auto& [e, c] : s.terms()) j["terms"].push_back({{"exp", e}, {"coef", to_json(c)}});
    return j;
}

namespace {

// (u_j - q^k): true when the constant is a pure power of the first variable.
bool pure_q_power(const ScalarQT& c, int& k) {
    BiPoly n = c.num(), d = c.den();
    if (!n.is_monomial() || !d.is_monomial()) return false;
    auto [ne, nc] = *n.terms().begin();
    auto [de, dc] = *d.terms().begin();
    if (nc != 1 || dc != 1 || ne[1] != de[1]) return false;
    if (ne[1] != 0) return false;
    k = ne[0] - de[0];
    return true;
}

template <class S>
json ratfn_json_impl(const RationalFn<S>& h, const std::vector<std::string>& names,
                     bool allow_qexp) {
    json j{{"num", json{{"vars", names}, {"terms", poly_terms(h.num())}}}};
    json factors = json::array();
    MultiPoly<S> extra = MultiPoly<S>::constant(h.nvars(), S(1));
    bool have_extra = false;
    for (const auto& [f, m] : h.den()) {
        int k = 0;
        if (allow_qexp && f.other < 0) {
            if constexpr (std::is_same_v<S, ScalarQT>) {
                if (pure_q_power(f.c, k)) {
                    factors.push_back({{"var", f.var}, {"q_exp", k}, {"mult", m}});
                    continue;
                }
            }
        }
        have_extra = true;
        for (int i = 0; i < m; ++i) extra *= RationalFn<S>::factor_poly(f, h.nvars());
    }
    j["den_factors"] = factors;
    if (have_extra) j["den_extra"] = json{{"vars", names}, {"terms", poly_terms(extra)}};
    return j;
}

}  // namespace

json ratfn_to_json(const RatFnQT& h, const std::vector<std::string>& names) {
    return ratfn_json_impl(h, names, true);
}

json ratfn_to_json(const RatFnKappa& h, const std::vector<std::string>& names) {
    return ratfn_json_impl(h, names, false);
}

std::vector<std::string> var_names(const std::string& stem, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

}  // namespace symqt
