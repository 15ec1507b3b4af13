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
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "burau/building/vertex.hpp"

namespace burau {

/// A nonzero proper subspace of F_p^3. Lines are stored by a normalized
/// spanning vector, planes by a normalized annihilating functional
/// (first nonzero coordinate 1 in both cases).
struct Subspace {
  int dim = 1;
  std::array<int, 3> coords{0, 0, 0};

  std::string to_string() const;
  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

/// All p^2+p+1 normalized nonzero vectors of F_p^3 in lexicographic order.
std::vector<std::array<int, 3>> projective_points(long p);

struct LinkVertex {
  VertexClass owner;
  Subspace subspace;
  VertexClass vertex;  // class of the lifted lattice
};

/// The link of a vertex: lines first, then planes, each in projective_points order.
class Link {
 public:
  explicit Link(const VertexClass& center);

  const VertexClass& center() const { return center_; }
  long prime() const { return center_.prime(); }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<LinkVertex>& vertices() const { return vertices_; }
  const LinkVertex& operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }

  std::optional<int> index_of(const VertexClass& v) const;
  std::optional<int> index_of(const Subspace& s) const;

  /// Incidence: a line and a plane are adjacent iff the line lies in the plane.
  bool adjacent(int i, int j) const;
  std::vector<int> neighbors(int i) const;

  /// Graphviz text of the incidence graph.
  std::string to_dot() const;

 private:
  VertexClass center_;
  std::vector<LinkVertex> vertices_;
  std::unordered_map<VertexClass, int> by_vertex_;
  std::map<Subspace, int> by_subspace_;
};

class NotStabilizing : public Error {
 public:
  using Error::Error;
};

struct LinkPermutation {
  std::vector<int> perm;  // image index of each link vertex
  bool type_preserving = true;

  /// Cycle lengths in ascending order.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<int>> cycles() const;
  bool is_identity() const;
  /// Order of the permutation.
  long order() const;
  /// e.g. `1^4 2^2 3^2 6^2`.
  std::string cycle_type_string() const;
  /// Disjoint cycle notation with 1-based indices; fixed points included.
  std::string to_string() const;
};

/// Permutation of link(v) induced by g. g must fix v.
/// Computed from alpha mod pi acting on L/piL.
LinkPermutation induced_link_permutation(const MatrixFp& g, const Link& link);

/// Same permutation computed by applying g to each link vertex and canonicalizing.
LinkPermutation induced_link_permutation_by_action(const MatrixFp& g, const Link& link);

}  // namespace burau
