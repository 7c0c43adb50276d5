#ifndef TAXICAB_JSON_HPP
#define TAXICAB_JSON_HPP

#include <json.hpp>

#include "taxicab/i5t.hpp"
#include "taxicab/isometry.hpp"

// Flat JSON forms of structured results. Every number is a rational literal
// string so values survive the round trip exactly.

namespace taxicab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Isometry& f) {
  Json j;
  j["isometry"] = f.str();
  j["linear"] = std::string(linear_part_name(f.linear));
  j["translation"] = f.translation.str();
  return j;
}

inline Json to_json(const I5TReport& r) {
  Json kinds = Json::array();
  for (QuadrantKind k : r.configuration.all_kinds) kinds.push_back(std::string(quadrant_kind_name(k)));
  Json j;
  j["configuration"] = std::string(quadrant_kind_name(r.configuration.kind));
  j["all_kinds"] = std::move(kinds);
  j["alpha"] = r.alpha.value.str();
  j["beta"] = r.beta.value.str();
  j["condition_predicted"] = r.condition_predicted;
  j["angles_equal_measured"] = r.angles_equal_measured;
  j["agreement"] = r.agreement;
  j["closed_form_matches"] = r.closed_form_matches;
  j["normalizing_isometry"] = r.normalizing_isometry.str();
  j["image_initial"] = r.image_initial.str();
  j["image_terminal"] = r.image_terminal.str();
  return j;
}

}  // namespace taxicab

#endif  // TAXICAB_JSON_HPP
