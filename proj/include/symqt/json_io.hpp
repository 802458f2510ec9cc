#pragma once

#include <json.hpp>

#include "symqt/dual.hpp"

namespace symqt {

using json = nlohmann::json;

json to_json(const ScalarQT& s);
json to_json(const ScalarKappa& s);
json to_json(const Partition& mu);

json poly_to_json(const PolyQT& p, const std::vector<std::string>& names);
json poly_to_json(const PolyKappa& p, const std::vector<std::string>& names);
json series_to_json(const SeriesQT& s, const std::vector<std::string>& names);

/// {"num": poly, "den_factors":[{"var":j,"q_exp":-k,"mult":m}],
///  "den_extra": poly?}; factors that are not (u_j - q^k) multiply into
/// den_extra.
json ratfn_to_json(const RatFnQT& h, const std::vector<std::string>& names);
json ratfn_to_json(const RatFnKappa& h, const std::vector<std::string>& names);

std::vector<std::string> var_names(const std::string& stem, int n);

}  // namespace symqt
