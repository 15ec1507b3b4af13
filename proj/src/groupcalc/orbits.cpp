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

#include "burau/groupcalc/orbits.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace burau {

namespace {

std::string inverse_word(const std::string& w) { return "(" + w + ")^-1"; }

bool fixes_all(const std::vector<MatrixFp>& gens, const VertexClass& v) {
  for (const auto& g : gens)
    if (!stabilizing_unit(g, v)) return false;
  return true;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

SpecialVertices find_special_vertices(const EvaluatorFp& ev, const ExactOptions& options) {
  if (ev.ring().modulus() != 3) throw DomainError("the special vertices are defined at p = 3");
  SpecialVertices out;
  out.identity = VertexClass::identity(ev.ring());
  const MatrixFp u = ev.evaluate("u");
  out.m19 = canonicalize(ev.evaluate("M19"));
  if (!stabilizing_unit(u, out.m19)) throw DomainError("u does not fix the M19 constant");
  const Link link(out.m19);
  const LinkPermutation perm = induced_link_permutation(u, link);
  const MatrixFp u1 = ev.evaluate("u1");
  std::vector<VertexClass> tube_candidates;
  for (int i = 0; i < link.size(); ++i) {
    if (perm.perm[static_cast<std::size_t>(i)] != i) continue;
    const VertexClass& v = link[i].vertex;
    const StabReport r = stab_exact(v, options);
    out.u_fixed_in_m19_link.emplace_back(v, r.group_order);
    if (r.group_order != 4 && r.group_order != 6) tube_candidates.push_back(v);
  }
  if (tube_candidates.empty()) throw DomainError("no tube vertex in Link(M19)");
  std::sort(tube_candidates.begin(), tube_candidates.end(), [&](const VertexClass& a, const VertexClass& b) {
    const bool fa = stabilizing_unit(u1, a).has_value(), fb = stabilizing_unit(u1, b).has_value();
    if (fa != fb) return fa;
    return a < b;
  });
  out.seven_star = tube_candidates.front();
  out.eleven_star = apply(ev.evaluate("x.y.x"), out.seven_star);
  return out;
}

std::optional<std::string> group_point_witness(const VertexClass& v, const std::vector<std::string>& generators,
                                               const EvaluatorFp& ev, int max_length) {
  std::vector<std::pair<std::string, MatrixFp>> letters;
  for (const auto& g : generators) {
    letters.emplace_back(g, ev.evaluate(g));
    letters.emplace_back(g + "^-1", ev.evaluate(inverse_word(g)));
  }
  const VertexClass start = VertexClass::identity(ev.ring());
  if (v == start) return std::string("1");
  // w.I = v; extend words on the left so the orbit graph can be walked vertex by vertex.
  std::unordered_map<VertexClass, std::string> seen{{start, ""}};
  std::vector<VertexClass> frontier{start};
  for (int len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<VertexClass> next;
    for (const auto& cur : frontier) {
      const std::string word = seen.at(cur);
      for (const auto& [name, m] : letters) {
        VertexClass w = apply(m, cur);
        if (seen.count(w)) continue;
        std::string nw = word.empty() ? name : name + "." + word;
        if (w == v) return nw;
        seen.emplace(w, nw);
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::map<VertexClass, int> ball(const VertexClass& center, int radius, long max_vertices) {
  std::map<VertexClass, int> dist{{center, 0}};
  std::deque<VertexClass> queue{center};
  while (!queue.empty()) {
    const VertexClass v = queue.front();
    queue.pop_front();
    const int d = dist.at(v);
    if (d == radius) continue;
    const Link link(v);
    for (const auto& lv : link.vertices()) {
      if (dist.emplace(lv.vertex, d + 1).second) {
        if (static_cast<long>(dist.size()) > max_vertices) throw BudgetExceeded("ball exceeds vertex budget");
        queue.push_back(lv.vertex);
      }
    }
  }
  return dist;
}

long claimed_tube_order(int k) {
  long n = 2;
  for (int i = 0; i < 2 * k + 1; ++i) n *= 3;
  return n;
}

std::string label_for_order(long p, long order) {
  if (p != 3) return "unknown";
  if (order == 4) return "group-point";
  if (order == 6) return "n-point";
  for (int k = 1; k <= 12; ++k)
    if (order == claimed_tube_order(k)) return "tube(" + std::to_string(k) + ")";
  return "unknown";
}

std::optional<int> OrbitTable::orbit_of(const VertexClass& v) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].members.begin(), orbits[i].members.end(), v)) return static_cast<int>(i);
  return std::nullopt;
}

std::string OrbitTable::to_dot() const {
  std::ostringstream os;
  os << "graph orbits {\n";
  os << "  label=\"p=" << p << " radius=" << radius << "\";\n";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& o = orbits[i];
    os << "  o" << i << " [label=\"" << o.label << "\\n" << o.representative.to_string() << "\\nsize " << o.size_within_radius
       << ", stab " << o.stab_order << "\"];\n";
  }
  for (const auto& [a, b] : adjacency) os << "  o" << a << " -- o" << b << ";\n";
  os << "}\n";
  return os.str();
}

OrbitTable orbit_classify(const EvaluatorFp& ev, const std::vector<std::string>& generators, int radius,
                          const OrbitOptions& options) {
  if (radius < 1) throw DomainError("radius must be >= 1");
  OrbitTable table;
  table.p = ev.ring().modulus();
  table.radius = radius;
  table.generators = generators;
  std::sort(table.generators.begin(), table.generators.end());

  const VertexClass start = VertexClass::identity(ev.ring());
  const int outer = radius + options.slack;
  std::vector<VertexClass> verts{start};
  std::vector<int> dist{0};
  std::unordered_map<VertexClass, int> index{{start, 0}};
  std::vector<std::vector<int>> nbrs;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    nbrs.emplace_back();
    if (dist[i] >= outer) continue;
    const Link link(verts[i]);
    for (const auto& lv : link.vertices()) {
      auto it = index.find(lv.vertex);
      if (it == index.end()) {
        if (static_cast<long>(verts.size()) >= options.max_vertices) {
          table.partial = true;
          continue;
        }
        it = index.emplace(lv.vertex, static_cast<int>(verts.size())).first;
        verts.push_back(lv.vertex);
        dist.push_back(dist[i] + 1);
      }
      nbrs[i].push_back(it->second);
    }
  }
  if (table.partial) table.notes.push_back("vertex budget reached; merges may be missing");

  std::vector<MatrixFp> moves;
  for (const auto& g : table.generators) {
    moves.push_back(ev.evaluate(g));
    moves.push_back(ev.evaluate(inverse_word(g)));
  }
  UnionFind uf(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (const auto& g : moves) {
      const auto it = index.find(apply(g, verts[i]));
      if (it != index.end()) uf.unite(static_cast<int>(i), it->second);
    }

  std::map<int, std::vector<int>> classes;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (dist[i] <= radius) classes[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  table.vertices = 0;
  std::optional<VertexClass> m19;
  if (table.p == 3 && ev.constants().has_matrix("M19")) m19 = canonicalize(ev.evaluate("M19"));
  for (auto& [root, members] : classes) {
    OrbitEntry e;
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      if (dist[static_cast<std::size_t>(a)] != dist[static_cast<std::size_t>(b)])
        return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
      return verts[static_cast<std::size_t>(a)] < verts[static_cast<std::size_t>(b)];
    });
    e.representative = verts[static_cast<std::size_t>(members.front())];
    e.distance = dist[static_cast<std::size_t>(members.front())];
    e.size_within_radius = static_cast<long>(members.size());
    for (int m : members) e.members.push_back(verts[static_cast<std::size_t>(m)]);
    std::sort(e.members.begin(), e.members.end());
    table.vertices += e.size_within_radius;
    table.orbits.push_back(std::move(e));
  }
  std::sort(table.orbits.begin(), table.orbits.end(), [](const OrbitEntry& a, const OrbitEntry& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.representative < b.representative;
  });
  if (options.compute_stabilizers) {
    // Results land in their own slots, so the output does not depend on scheduling.
    std::vector<std::future<StabReport>> pending;
    std::vector<StabReport> reports(table.orbits.size());
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));
    for (std::size_t i = 0; i < table.orbits.size(); i += jobs) {
      pending.clear();
      for (std::size_t k = i; k < std::min(i + jobs, table.orbits.size()); ++k) {
        const VertexClass rep = table.orbits[k].representative;
        pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, [rep, &start, &table, &options] {
          return rep == start ? stab_identity_exact(table.p) : stab_exact(rep, options.exact);
        }));
      }
      for (std::size_t k = 0; k < pending.size(); ++k) reports[i + k] = pending[k].get();
    }
    for (std::size_t i = 0; i < table.orbits.size(); ++i) {
      table.orbits[i].stab_order = reports[i].group_order;
      table.orbits[i].stab_image_order = reports[i].image_order;
      table.orbits[i].stab_complete = reports[i].complete;
    }
  }
  for (auto& e : table.orbits) {
    const bool has_identity = std::binary_search(e.members.begin(), e.members.end(), start);
    const bool has_m19 = m19 && std::binary_search(e.members.begin(), e.members.end(), *m19);
    if (has_identity) {
      e.label = "group-point";
    } else if (has_m19) {
      e.label = "n-point";
    } else {
      e.label = e.stab_complete ? label_for_order(table.p, e.stab_order) : "unknown";
    }
    if (table.p == 3 && e.stab_complete && (has_identity || has_m19) && label_for_order(table.p, e.stab_order) != e.label)
      table.notes.push_back("stabilizer order " + std::to_string(e.stab_order) + " disagrees with label " + e.label);
  }
  std::unordered_map<VertexClass, int> orbit_index;
  for (std::size_t i = 0; i < table.orbits.size(); ++i)
    for (const auto& m : table.orbits[i].members) orbit_index.emplace(m, static_cast<int>(i));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (dist[i] > radius) continue;
    for (int j : nbrs[i]) {
      if (dist[static_cast<std::size_t>(j)] > radius) continue;
      int a = orbit_index.at(verts[i]), b = orbit_index.at(verts[static_cast<std::size_t>(j)]);
      table.adjacency.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return table;
}

std::vector<TubeLevel> tube_pattern_check(const EvaluatorFp& ev, int kmax, const TubeOptions& options) {
  if (kmax < 1) throw DomainError("kmax must be >= 1");
  const SpecialVertices sv = find_special_vertices(ev);
  const MatrixFp xyx = ev.evaluate("x.y.x");
  std::vector<TubeLevel> out;
  VertexClass prev = sv.m19;
  VertexClass v = sv.seven_star;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::string> gens{"u", "h"};
    for (int i = 1; i <= k; ++i) gens.push_back("a" + std::to_string(i));
    WordSearchOptions wo;
    wo.depth = 1;
    wo.close_group = options.close_group;
    wo.max_group_order = options.max_group_order;
    const StabReport r = stab_words(v, gens, ev, wo);
    TubeLevel level;
    level.k = k;
    level.vertex = v;
    level.partner = apply(xyx, v);
    level.image_order = r.image_order;
    level.group_order = r.group_order;
    level.claimed_order = claimed_tube_order(k);
    level.image_orbit_sizes = r.image_orbit_sizes;
    level.image_ok = r.image_order == (k == 1 ? 18 : 54);
    level.order_ok = r.group_order == level.claimed_order;
    out.push_back(level);
    if (k == kmax) break;

    std::vector<MatrixFp> stab;
    for (const auto& g : gens) stab.push_back(ev.evaluate(g));
    const MatrixFp next_alpha = ev.evaluate("a" + std::to_string(k + 1));
    const Link link(v);
    std::vector<VertexClass> cands;
    for (const auto& lv : link.vertices())
      if (lv.vertex != prev && fixes_all(stab, lv.vertex)) cands.push_back(lv.vertex);
    if (cands.empty()) throw DomainError("tube walk found no successor at level " + std::to_string(k));
    std::sort(cands.begin(), cands.end(), [&](const VertexClass& a, const VertexClass& b) {
      const bool fa = stabilizing_unit(next_alpha, a).has_value(), fb = stabilizing_unit(next_alpha, b).has_value();
      if (fa != fb) return fa;
      return a < b;
    });
    prev = v;
    v = cands.front();
  }
  return out;
}

}  // namespace burau
