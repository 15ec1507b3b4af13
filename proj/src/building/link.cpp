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

#include "burau/building/link.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "burau/arith/ratfunc.hpp"

namespace burau {

namespace {

using Vec = std::array<int, 3>;
using Mat = std::array<std::array<int, 3>, 3>;

int mod(long a, long p) { return static_cast<int>(((a % p) + p) % p); }

int inv_mod(int a, long p) {
  const ModP ring(p);
  return static_cast<int>(ring.inv(a));
}

Vec normalized(Vec v, long p) {
  for (int i = 0; i < 3; ++i) {
    if (v[static_cast<std::size_t>(i)] != 0) {
      const long s = inv_mod(v[static_cast<std::size_t>(i)], p);
      for (int& x : v) x = mod(x * s, p);
      return v;
    }
  }
  throw DomainError("zero vector has no projective point");
}

int pivot(const Vec& v) {
  for (int i = 0; i < 3; ++i)
    if (v[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

Mat reduce_unit(const MatrixFp& alpha, long p) {
  Mat a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mod(static_cast<long>(alpha(i, j).coeff(0)), p);
  return a;
}

Vec mul(const Mat& a, const Vec& v, long p) {
  Vec r{};
  for (std::size_t i = 0; i < 3; ++i) {
    long s = 0;
    for (std::size_t k = 0; k < 3; ++k) s += static_cast<long>(a[i][k]) * v[k];
    r[i] = mod(s, p);
  }
  return r;
}

/// Row vector f times a.
Vec mul(const Vec& f, const Mat& a, long p) {
  Vec r{};
  for (std::size_t j = 0; j < 3; ++j) {
    long s = 0;
    for (std::size_t k = 0; k < 3; ++k) s += static_cast<long>(f[k]) * a[k][j];
    r[j] = mod(s, p);
  }
  return r;
}

Mat inverse(const Mat& a, long p) {
  auto at = [&](int i, int j) { return static_cast<long>(a[static_cast<std::size_t>(i % 3)][static_cast<std::size_t>(j % 3)]); };
  Mat adj{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          mod(at(i + 1, j + 1) * at(i + 2, j + 2) - at(i + 1, j + 2) * at(i + 2, j + 1), p);
  long det = 0;
  for (int j = 0; j < 3; ++j) det += at(0, j) * adj[static_cast<std::size_t>(j)][0];
  det = mod(det, p);
  if (det == 0) throw SingularMatrix();
  const long d = inv_mod(static_cast<int>(det), p);
  for (auto& row : adj)
    for (int& x : row) x = mod(x * d, p);
  return adj;
}

VertexClass lift(const MatrixFp& m, const Subspace& s, const ModP& ring) {
  const long p = ring.modulus();
  const LaurentFp zero(ring, Var::t, 0, {});
  const LaurentFp one = LaurentFp::constant(ring, 1);
  const LaurentFp pi = uniformizer(ring);
  const int i0 = pivot(s.coords);
  MatrixFp c;
  c.setConstant(zero);
  int col = 0;
  if (s.dim == 1) {
    for (int i = 0; i < 3; ++i) c(i, 0) = LaurentFp::constant(ring, s.coords[static_cast<std::size_t>(i)]);
    col = 1;
    for (int i = 0; i < 3; ++i) {
      if (i == i0) continue;
      c(i, col++) = pi;
    }
  } else {
    for (int j = 0; j < 3; ++j) {
      if (j == i0) continue;
      c(j, col) = one;
      c(i0, col) = LaurentFp::constant(ring, mod(-s.coords[static_cast<std::size_t>(j)], p));
      ++col;
    }
    c(i0, 2) = pi;
  }
  return canonicalize((m * c).eval());
}

}  // namespace

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << (dim == 1 ? "line(" : "plane(") << coords[0] << ',' << coords[1] << ',' << coords[2] << ')';
  return os.str();
}

std::vector<std::array<int, 3>> projective_points(long p) {
  std::vector<Vec> out;
  const int q = static_cast<int>(p);
  // Lexicographic by pivot position, then by remaining coordinates.
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) out.push_back({1, a, b});
  for (int b = 0; b < q; ++b) out.push_back({0, 1, b});
  out.push_back({0, 0, 1});
  return out;
}

Link::Link(const VertexClass& center) : center_(center) {
  const ModP ring(center.prime());
  const MatrixFp m = center.matrix();
  const auto points = projective_points(center.prime());
  for (int dim = 1; dim <= 2; ++dim) {
    for (const auto& pt : points) {
      Subspace s{dim, pt};
      const VertexClass v = lift(m, s, ring);
      const int index = size();
      if (!by_vertex_.emplace(v, index).second) throw DomainError("duplicate link vertex " + v.to_string());
      by_subspace_.emplace(s, index);
      vertices_.push_back(LinkVertex{center_, s, v});
    }
  }
}

std::optional<int> Link::index_of(const VertexClass& v) const {
  const auto it = by_vertex_.find(v);
  if (it == by_vertex_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Link::index_of(const Subspace& s) const {
  const auto it = by_subspace_.find(s);
  if (it == by_subspace_.end()) return std::nullopt;
  return it->second;
}

bool Link::adjacent(int i, int j) const {
  const Subspace& a = (*this)[i].subspace;
  const Subspace& b = (*this)[j].subspace;
  if (a.dim == b.dim) return false;
  long s = 0;
  for (std::size_t k = 0; k < 3; ++k) s += static_cast<long>(a.coords[k]) * b.coords[k];
  return s % prime() == 0;
}

std::vector<int> Link::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

std::string Link::to_dot() const {
  std::ostringstream os;
  os << "graph link {\n";
  os << "  label=\"link of " << center_.to_string() << "\";\n";
  for (int i = 0; i < size(); ++i) {
    const auto& v = (*this)[i];
    os << "  n" << i << " [label=\"" << i + 1 << ": " << v.subspace.to_string() << "\\n" << v.vertex.to_string()
       << "\", shape=" << (v.subspace.dim == 1 ? "circle" : "box") << "];\n";
  }
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adjacent(i, j)) os << "  n" << i << " -- n" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<std::vector<int>> LinkPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      c.push_back(static_cast<int>(j));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> LinkPermutation::cycle_type() const {
  std::vector<int> out;
  for (const auto& c : cycles()) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

bool LinkPermutation::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

long LinkPermutation::order() const {
  long n = 1;
  for (int len : cycle_type()) n = std::lcm(n, static_cast<long>(len));
  return n;
}

std::string LinkPermutation::cycle_type_string() const {
  std::map<int, int> counts;
  for (int len : cycle_type()) ++counts[len];
  std::ostringstream os;
  bool first = true;
  for (const auto& [len, n] : counts) {
    os << (first ? "" : " ") << len << '^' << n;
    first = false;
  }
  return os.str();
}

std::string LinkPermutation::to_string() const {
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

LinkPermutation induced_link_permutation(const MatrixFp& g, const Link& link) {
  const auto alpha = stabilizing_unit(g, link.center());
  if (!alpha) throw NotStabilizing("element does not fix " + link.center().to_string());
  const long p = link.prime();
  const Mat a = reduce_unit(*alpha, p);
  const Mat ainv = inverse(a, p);
  LinkPermutation out;
  out.perm.resize(static_cast<std::size_t>(link.size()));
  for (int i = 0; i < link.size(); ++i) {
    const Subspace& s = link[i].subspace;
    Subspace image{s.dim, s.dim == 1 ? normalized(mul(a, s.coords, p), p) : normalized(mul(s.coords, ainv, p), p)};
    out.perm[static_cast<std::size_t>(i)] = *link.index_of(image);
  }
  return out;
}

LinkPermutation induced_link_permutation_by_action(const MatrixFp& g, const Link& link) {
  if (apply(g, link.center()) != link.center())
    throw NotStabilizing("element does not fix " + link.center().to_string());
  LinkPermutation out;
  out.perm.resize(static_cast<std::size_t>(link.size()));
  std::vector<bool> hit(out.perm.size(), false);
  for (int i = 0; i < link.size(); ++i) {
    const auto j = link.index_of(apply(g, link[i].vertex));
    if (!j || hit[static_cast<std::size_t>(*j)]) throw DomainError("action does not permute the link");
    hit[static_cast<std::size_t>(*j)] = true;
    out.perm[static_cast<std::size_t>(i)] = *j;
    if (link[*j].subspace.dim != link[i].subspace.dim) out.type_preserving = false;
  }
  return out;
}

}  // namespace burau
