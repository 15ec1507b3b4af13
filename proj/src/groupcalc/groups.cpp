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

#include "burau/groupcalc/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "burau/rep/homothety.hpp"

namespace burau {

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Perm identity_perm(int degree) {
  Perm out(static_cast<std::size_t>(degree));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Perm inverse_perm(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

long perm_order(const Perm& a) {
  long n = 1;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(a[j])) {
      seen[j] = true;
      ++len;
    }
    if (len) n = std::lcm(n, len);
  }
  return n;
}

PermGroup::PermGroup(int degree, const std::vector<Perm>& generators, long max_order)
    : degree_(degree), generators_(generators) {
  for (const auto& g : generators_)
    if (static_cast<int>(g.size()) != degree) throw DomainError("generator degree mismatch");
  std::set<Perm> seen{identity_perm(degree)};
  std::deque<Perm> queue{identity_perm(degree)};
  while (!queue.empty()) {
    const Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      Perm next = compose(g, cur);
      if (seen.insert(next).second) {
        if (static_cast<long>(seen.size()) > max_order)
          throw BudgetExceeded("permutation group exceeds " + std::to_string(max_order) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
}

bool PermGroup::contains(const Perm& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

bool PermGroup::is_abelian() const {
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if (compose(a, b) != compose(b, a)) return false;
  return true;
}

long PermGroup::center_order() const {
  long n = 0;
  for (const auto& z : elements_) {
    bool central = true;
    for (const auto& g : generators_) central = central && compose(z, g) == compose(g, z);
    n += central;
  }
  return n;
}

std::map<long, long> PermGroup::order_statistics() const {
  std::map<long, long> out;
  for (const auto& g : elements_) ++out[perm_order(g)];
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> parent(static_cast<std::size_t>(degree_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& g : generators_)
    for (int i = 0; i < degree_; ++i) {
      const int a = find(i), b = find(g[static_cast<std::size_t>(i)]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < degree_; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<int> PermGroup::orbit_sizes() const {
  std::vector<int> out;
  for (const auto& o : orbits()) out.push_back(static_cast<int>(o.size()));
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::map<long, long> z3_times_d3_order_statistics() { return {{1, 1}, {2, 3}, {3, 8}, {6, 6}}; }

bool consistent_with_z3_times_d3(const PermGroup& g) {
  return g.order() == 18 && !g.is_abelian() && g.center_order() == 3 &&
         g.order_statistics() == z3_times_d3_order_statistics();
}

bool is_cyclic(const PermGroup& g) {
  for (const auto& e : g.elements())
    if (perm_order(e) == g.order()) return true;
  return false;
}

std::vector<MatrixFp> matrix_group_closure(const std::vector<MatrixFp>& generators, long max_order) {
  if (generators.empty()) throw DomainError("matrix_group_closure needs at least one generator");
  std::vector<MatrixFp> gens;
  for (const auto& g : generators) gens.push_back(normalize_mod_homothety(g));
  const MatrixFp one = normalize_mod_homothety(identity(gens.front()(0, 0).ring(), Var::t));
  std::map<std::string, MatrixFp> seen{{matrix_key(one), one}};
  std::deque<MatrixFp> queue{one};
  while (!queue.empty()) {
    const MatrixFp cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      MatrixFp next = normalize_mod_homothety((g * cur).eval());
      std::string key = matrix_key(next);
      if (seen.find(key) != seen.end()) continue;
      if (static_cast<long>(seen.size()) >= max_order)
        throw BudgetExceeded("matrix group exceeds " + std::to_string(max_order) + " elements");
      seen.emplace(std::move(key), next);
      queue.push_back(std::move(next));
    }
  }
  std::vector<MatrixFp> out;
  out.reserve(seen.size());
  for (auto& [key, m] : seen) out.push_back(std::move(m));
  return out;
}

std::vector<int> greedy_generators(int degree, const std::vector<Perm>& elements) {
  std::vector<int> chosen;
  std::vector<Perm> gens;
  std::optional<PermGroup> current;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == identity_perm(degree)) continue;
    if (current && current->contains(elements[i])) continue;
    gens.push_back(elements[i]);
    chosen.push_back(static_cast<int>(i));
    current.emplace(degree, gens);
  }
  return chosen;
}

}  // namespace burau
