#pragma once

#include <json.hpp>

#include "appnorm/extension.hpp"
#include "appnorm/maps.hpp"

namespace appnorm {

using json = nlohmann::json;

// Space file: {"points": ["x","y"], "q": [["0","4"],["inf","0"]]}; entries are
// "inf", integers, "p/q" or exact decimals; row i column j is q(p_i, p_j).
finite_space space_from_json(const json& j,
                             orientation orient = orientation::row_to_column);
json space_to_json(const finite_space& s);

extvalue value_from_json(const json& j);

// Function file: {"values": {"x": "4", ...}, "bound": "4"?}; every point of
// the space must be present unless a carrier is given.
fn_over_space fn_from_json(const finite_space& s, const json& j,
                           std::optional<pointset> carrier = std::nullopt);
json fn_to_json(const finite_space& s, const fn_over_space& f);

scale scale_from_json(const finite_space& s, const json& j);
json scale_to_json(const finite_space& s, const scale& F);

development development_from_json(const finite_space& s, const json& j);
json development_to_json(const finite_space& s, const development& dev);

json pointset_to_json(const finite_space& s, pointset p);
pointset pointset_from_json(const finite_space& s, const json& j);

json verdict_to_json(const finite_space& s, const normality_verdict& v);
json interpolation_to_json(const finite_space& s, const interpolation_result& r);
json extension_to_json(const finite_space& s, const extension_result& r);

}  // namespace appnorm
