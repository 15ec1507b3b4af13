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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "burau/building/link.hpp"
#include "burau/groupcalc/groups.hpp"
#include "burau/rep/evaluate.hpp"

namespace burau {

enum class StabMethod { exact, word_search };
std::string method_name(StabMethod m);

/// Per-entry pi-degree bounds for alpha in g M = M alpha (up to homothety),
/// derived from the valuations of G = M* J M and G^-1. -1 forces a zero entry.
struct CoeffSearchBounds {
  std::array<std::array<int, 3>, 3> degree{};
  int digit_bound = 0;       // cap on digits per entry (0 = none)
  long budget_nodes = 0;     // cap on enumerated column candidates (0 = none)
  long nodes_visited = 0;
  bool truncated = false;    // a cap was hit

  int total_digits() const;
  std::string to_string() const;
};

CoeffSearchBounds coefficient_bounds(const VertexClass& v);

struct StabReport {
  VertexClass vertex;
  StabMethod method = StabMethod::exact;
  /// True only for an exact search that ran within its bounds.
  bool complete = false;
  /// Order of the stabilizer modulo homothety (a lower bound for word search).
  long group_order = 0;
  /// Order of the induced permutation group on the link.
  long image_order = 0;
  std::vector<int> image_orbit_sizes;
  std::map<long, long> image_order_statistics;
  bool image_type_preserving = true;
  /// Stabilizing elements, normalized modulo homothety.
  std::vector<MatrixFp> generators;
  /// Words for the generators (word search only).
  std::vector<std::string> generator_words;
  std::optional<CoeffSearchBounds> bounds;
  int word_depth = 0;
  std::vector<std::string> notes;
};

/// Largest prime accepted by stab_identity_exact.
constexpr long kIdentitySearchMaxPrime = 11;

enum class IdentitySearch { automatic, plain, backtrack };

/// Constant matrices A with A^T J A = J, reported modulo scalars. The plain
/// method walks all of GL_3(F_p); backtracking builds A column by column and
/// prunes with the Gram conditions of the columns already chosen.
StabReport stab_identity_exact(long p, IdentitySearch method = IdentitySearch::automatic);

struct ExactOptions {
  int digit_bound = 8;
  long budget_nodes = 20'000'000;
};

/// All alpha in GL_3(O) with Laurent entries and alpha* G alpha = G, found by
/// column enumeration inside the valuation bounds, then pairwise Gram pruning.
StabReport stab_exact(const VertexClass& v, const ExactOptions& options = {});

struct WordSearchOptions {
  int depth = 2;
  bool use_inverses = false;
  long max_elements = 200'000;
  /// Also close the found stabilizing elements to get a group order (lower bound).
  bool close_group = true;
  long max_group_order = 20'000;
};

/// Breadth-first search over products of the generator words up to the given
/// length; keeps the elements that fix v. The result is a lower bound.
StabReport stab_words(const VertexClass& v, const std::vector<std::string>& generators, const EvaluatorFp& ev,
                      const WordSearchOptions& options = {});

/// Independent re-check: each generator is J-unitary and fixes the vertex.
std::vector<std::string> audit_report(const StabReport& report);

}  // namespace burau
