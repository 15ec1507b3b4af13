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
#include <set>
#include <string>
#include <vector>

#include "burau/groupcalc/stabilizer.hpp"

namespace burau {

/// Vertices that recur in the p = 3 computations.
struct SpecialVertices {
  VertexClass identity;
  VertexClass m19;          // vertex of Link(I) fixed by u
  VertexClass seven_star;   // tube vertex 7* in Link(M19)
  VertexClass eleven_star;  // xyx(7*)
  /// The u-fixed vertices of Link(M19) with their exact stabilizer orders.
  std::vector<std::pair<VertexClass, long>> u_fixed_in_m19_link;
};

/// Locates M19 and 7* from u, u1 and exact stabilizer orders (p = 3 only).
SpecialVertices find_special_vertices(const EvaluatorFp& ev, const ExactOptions& options = {});

/// Shortest word w over the generators (and their inverses) with w.I = v, found
/// by breadth-first search of the orbit of I up to max_length letters.
std::optional<std::string> group_point_witness(const VertexClass& v, const std::vector<std::string>& generators,
                                               const EvaluatorFp& ev, int max_length);

/// Vertices within link distance `radius` of v, with their distances.
std::map<VertexClass, int> ball(const VertexClass& center, int radius, long max_vertices = 2'000'000);

struct OrbitEntry {
  VertexClass representative;
  int distance = 0;  // from I
  long size_within_radius = 0;
  long stab_order = 0;
  long stab_image_order = 0;
  bool stab_complete = false;
  std::string label;  // group-point | n-point | tube(k) | unknown
  std::vector<VertexClass> members;
};

struct OrbitOptions {
  int slack = 1;  // extra shells used only for merging
  long max_vertices = 200'000;
  ExactOptions exact{};
  bool compute_stabilizers = true;
  int jobs = 1;  // worker threads for the per-orbit stabilizer searches
};

struct OrbitTable {
  long p = 0;
  int radius = 0;
  std::vector<std::string> generators;
  std::vector<OrbitEntry> orbits;  // sorted by (distance, representative)
  long vertices = 0;
  bool partial = false;
  std::vector<std::string> notes;
  /// Orbit index pairs (i <= j) joined by an edge inside the radius.
  std::set<std::pair<int, int>> adjacency;

  std::optional<int> orbit_of(const VertexClass& v) const;
  std::string to_dot() const;
};

/// Union-find over generator moves inside the ball of radius + slack, then a
/// label per class from its exact stabilizer order.
OrbitTable orbit_classify(const EvaluatorFp& ev, const std::vector<std::string>& generators, int radius,
                          const OrbitOptions& options = {});

/// Label for an exact stabilizer order at p = 3.
std::string label_for_order(long p, long order);

struct TubeLevel {
  int k = 0;
  VertexClass vertex;
  VertexClass partner;  // xyx applied to the vertex
  long image_order = 0;
  long group_order = 0;  // word-search lower bound
  long claimed_order = 0;  // 2 * 3^(2k+1)
  std::vector<int> image_orbit_sizes;
  bool image_ok = false;   // 54 for k >= 2, 18 for k = 1
  bool order_ok = false;
};

struct TubeOptions {
  long max_group_order = 50'000;
  bool close_group = true;
};

/// Walks 7* -> 7^(2) -> ... -> 7^(kmax). Each step takes the vertices of the
/// current link fixed by u, h, alpha_1..alpha_k other than the previous level,
/// prefers one fixed by alpha_(k+1), and breaks ties by canonical order.
std::vector<TubeLevel> tube_pattern_check(const EvaluatorFp& ev, int kmax, const TubeOptions& options = {});

long claimed_tube_order(int k);

}  // namespace burau
