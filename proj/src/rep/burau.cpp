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

#include "burau/rep/burau.hpp"

#include "burau/rep/squier.hpp"

namespace burau {

std::string BurauConvention::name() const {
  if (!transpose && !invert && !swap_t) return "textbook";
  std::string out;
  auto add = [&](bool on, const char* tag) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += tag;
  };
  add(transpose, "transpose");
  add(invert, "invert");
  add(swap_t, "swap_t");
  return out;
}

std::optional<BurauConvention> BurauConvention::from_name(const std::string& name) {
  for (const auto& c : standard_conventions())
    if (c.name() == name) return c;
  return std::nullopt;
}

std::array<BurauConvention, 8> standard_conventions() {
  std::array<BurauConvention, 8> out;
  for (int k = 0; k < 8; ++k) out[static_cast<std::size_t>(k)] = {(k & 1) != 0, (k & 2) != 0, (k & 4) != 0};
  return out;
}

bool convention_is_unitary(const BurauConvention& conv, const ModP& ring) {
  for (int i = 1; i <= 3; ++i)
    if (!is_unitary(burau_generator(i, ring, conv))) return false;
  return true;
}

std::optional<BurauConvention> select_convention(const ModP& ring) {
  for (const auto& c : standard_conventions())
    if (convention_is_unitary(c, ring)) return c;
  return std::nullopt;
}

}  // namespace burau
