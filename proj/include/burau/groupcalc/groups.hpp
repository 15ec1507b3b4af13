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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burau/arith/matrix.hpp"

namespace burau {

using Perm = std::vector<int>;

/// (a * b)(i) = a[b[i]], i.e. b first.
Perm compose(const Perm& a, const Perm& b);
Perm identity_perm(int degree);
Perm inverse_perm(const Perm& a);
long perm_order(const Perm& a);

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A finite permutation group, stored by its full element list.
class PermGroup {
 public:
  /// Closure of the generators. Throws BudgetExceeded past max_order elements.
  PermGroup(int degree, const std::vector<Perm>& generators, long max_order = 1'000'000);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const;
  bool is_abelian() const;
  long center_order() const;
  /// Number of elements of each order.
  std::map<long, long> order_statistics() const;
  std::vector<std::vector<int>> orbits() const;
  /// Orbit sizes, descending.
  std::vector<int> orbit_sizes() const;

 private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted
};

/// Element-order statistics of Z_3 x D_3 (order 18).
std::map<long, long> z3_times_d3_order_statistics();
/// Nonabelian, center of order 3 and the element orders of Z_3 x D_3.
bool consistent_with_z3_times_d3(const PermGroup& g);
/// Cyclic iff some element has order |G|.
bool is_cyclic(const PermGroup& g);

/// Closure of matrices over F_p[t,1/t] modulo homothety. Elements are returned
/// in normalized form (normalize_mod_homothety), sorted by key. Throws
/// BudgetExceeded past max_order elements.
std::vector<MatrixFp> matrix_group_closure(const std::vector<MatrixFp>& generators, long max_order = 100'000);

/// Greedy generating subset: walks `elements` in order and keeps each one not
/// already in the closure of those kept so far.
std::vector<int> greedy_generators(int degree, const std::vector<Perm>& elements);

}  // namespace burau
