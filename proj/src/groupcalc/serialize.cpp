/*
   Copyright 2026 The burau-mod-p Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "burau/groupcalc/serialize.hpp"

namespace burau {

using nlohmann::json;

json to_json(const CoeffSearchBounds& b) {
  json degree = json::array();
  for (const auto& row : b.degree) degree.push_back(json(std::vector<int>(row.begin(), row.end())));
  return json{{"degree", degree},           {"digit_bound", b.digit_bound}, {"budget_nodes", b.budget_nodes},
              {"nodes_visited", b.nodes_visited}, {"truncated", b.truncated},   {"total_digits", b.total_digits()}};
}

json to_json(const StabReport& r, bool include_elements) {
  json stats = json::object();
  for (const auto& [order, count] : r.image_order_statistics) stats[std::to_string(order)] = count;
  json out{{"vertex", r.vertex.to_string()},
           {"method", method_name(r.method)},
           {"complete", r.complete},
           {"group_order", r.group_order},
           {"image_order", r.image_order},
           {"image_orbit_sizes", r.image_orbit_sizes},
           {"image_order_statistics", stats},
           {"type_preserving", r.image_type_preserving},
           {"element_count", r.generators.size()},
           {"generator_words", r.generator_words},
           {"word_depth", r.word_depth},
           {"notes", r.notes},
           {"bounds", r.bounds ? to_json(*r.bounds) : json(nullptr)}};
  if (include_elements) {
    json elements = json::array();
    for (const auto& g : r.generators) elements.push_back(to_string(g));
    out["elements"] = elements;
  }
  return out;
}

json to_json(const OrbitTable& t, bool include_members) {
  json orbits = json::array();
  for (std::size_t i = 0; i < t.orbits.size(); ++i) {
    const auto& o = t.orbits[i];
    json e{{"id", i},
           {"representative", o.representative.to_string()},
           {"distance", o.distance},
           {"size_within_radius", o.size_within_radius},
           {"stab_order", o.stab_order},
           {"stab_image_order", o.stab_image_order},
           {"stab_complete", o.stab_complete},
           {"label", o.label}};
    if (include_members) {
      json members = json::array();
      for (const auto& m : o.members) members.push_back(m.to_string());
      e["members"] = members;
    }
    orbits.push_back(e);
  }
  json adjacency = json::array();
  for (const auto& [a, b] : t.adjacency) adjacency.push_back(json::array({a, b}));
  return json{{"p", t.p},           {"radius", t.radius},   {"generators", t.generators}, {"orbits", orbits},
              {"vertices", t.vertices}, {"partial", t.partial}, {"notes", t.notes},         {"adjacency", adjacency}};
}

json to_json(const RelationReport& r) {
  return json{{"family", r.family},
              {"name", r.name},
              {"relator", r.relator},
              {"letters", r.letters},
              {"holds_mod_p", r.holds_mod_p},
              {"holds_integrally", r.holds_integrally ? json(*r.holds_integrally) : json(nullptr)}};
}

json to_json(const WitnessReport& r) {
  json degrees = json::array();
  for (const auto& [lo, hi] : r.integral_degrees) degrees.push_back(json::array({lo, hi}));
  return json{{"relation", to_json(r.relation)},
              {"checked_mod_p", r.checked_mod_p},
              {"checked_integrally", r.checked_integrally},
              {"integral_entry_degrees", degrees},
              {"integral_max_coefficient", r.integral_max_coefficient},
              {"pass", r.pass()}};
}

json to_json(const TubeLevel& l) {
  return json{{"k", l.k},
              {"vertex", l.vertex.to_string()},
              {"partner", l.partner.to_string()},
              {"image_order", l.image_order},
              {"group_order", l.group_order},
              {"claimed_order", l.claimed_order},
              {"image_orbit_sizes", l.image_orbit_sizes},
              {"image_ok", l.image_ok},
              {"order_ok", l.order_ok}};
}

json to_json(const LinkPermutation& p) {
  return json{{"perm", p.perm},
              {"cycle_type", p.cycle_type()},
              {"cycles", p.to_string()},
              {"order", p.order()},
              {"type_preserving", p.type_preserving}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace burau
