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

#pragma once

#include <json.hpp>

#include "burau/groupcalc/orbits.hpp"
#include "burau/groupcalc/relations.hpp"

namespace burau {

/// Schema tag written into every top-level document.
inline constexpr const char* kSchema = "burau-mod-p/1";

/// Field names are snake_case; nlohmann's default object keeps keys sorted,
/// so dump() output is stable and round-trips byte for byte.
nlohmann::json to_json(const CoeffSearchBounds& b);
nlohmann::json to_json(const StabReport& r, bool include_elements = true);
nlohmann::json to_json(const OrbitTable& t, bool include_members = false);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const WitnessReport& r);
nlohmann::json to_json(const TubeLevel& l);
nlohmann::json to_json(const LinkPermutation& p);

/// Canonical text: 2-space indent, sorted keys, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace burau
