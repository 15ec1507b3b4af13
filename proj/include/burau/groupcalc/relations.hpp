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

#include <optional>
#include <string>
#include <vector>

#include "burau/rep/evaluate.hpp"

namespace burau {

struct Relator {
  int family = 0;
  std::string name;  // e.g. "x^4", "[x^2, yxy]"
  GroupWord word;
};

/// The presentation relators of the isometry group at p = 3, by family:
/// 1: x^4, y^3, u^6; 2: [x^2, yxy]; 3: [x, w]; 4: [yxy, w]; 5: [xyx, u^2];
/// 6: [x^2yx, u^3]; 7: (u^2x^2yx)^2 (x^2yxu^2)^-2. [a, b] = a^-1 b^-1 a b.
std::vector<Relator> presentation_relators();

struct RelationReport {
  int family = 0;
  std::string name;
  std::string relator;
  int letters = 0;
  bool holds_mod_p = false;
  /// Only for words over the braid letters.
  std::optional<bool> holds_integrally;
};

/// Evaluates every relator over F_p (requires the p = 3 constants) and the
/// braid-only ones over Z as well.
std::vector<RelationReport> verify_relations(const EvaluatorFp& ev);

struct WitnessReport {
  RelationReport relation;
  bool checked_mod_p = true;
  bool checked_integrally = true;
  /// Per-entry (min, max) t-degrees of the integral matrix.
  std::vector<std::pair<int, int>> integral_degrees;
  std::string integral_max_coefficient;

  bool pass() const;
};

WitnessReport kernel_witness_check(bool mod_p = true, bool integral = true);

/// Generators and relators in a GAP-style text block.
std::string presentation_text();

}  // namespace burau
