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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "burau/arith/matrix.hpp"

namespace burau {

/// A vertex of the building: a homothety class of O-lattices in F_p(t)^3,
/// stored as its canonical basis.
///
/// The canonical basis is lower triangular. Column j has pi^a_j on the
/// diagonal, and the entry in row i > j is a pi-adic polynomial of degree
/// < a_i (its `a_i` digits are stored). The lattice is scaled so that it lies
/// in O^3 but not in pi*O^3. Rows are never permuted, so the exponents are
/// positional.
class VertexClass {
 public:
  using Digit = std::uint8_t;

  VertexClass() = default;
  VertexClass(long p, std::array<int, 3> exponents, std::array<std::vector<Digit>, 3> digits);

  /// The standard lattice O^3.
  static VertexClass identity(const ModP& ring);

  long prime() const { return p_; }
  const std::array<int, 3>& exponents() const { return exponents_; }
  /// Digits of entries (2,1), (3,1), (3,2) in that order.
  const std::array<std::vector<Digit>, 3>& digits() const { return digits_; }

  /// Canonical basis as a Laurent matrix in t (entries are polynomials in pi = 1/t).
  MatrixFp matrix() const;

  /// Text form `(a1,a2,a3 | d21 / d31 / d32)`, digit lists written low-order first
  /// and comma-separated, `-` for an empty list. Example: `(1,0,0 | - / - / -)`.
  std::string to_string() const;
  static VertexClass parse(const std::string& text, const ModP& ring);

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
  friend bool operator<(const VertexClass& a, const VertexClass& b) {
    if (a.exponents_ != b.exponents_) return a.exponents_ < b.exponents_;
    return a.digits_ < b.digits_;
  }

  std::size_t hash() const;

 private:
  long p_ = 0;
  std::array<int, 3> exponents_{0, 0, 0};
  std::array<std::vector<Digit>, 3> digits_;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("singular matrix does not define a lattice") {}
};

/// Canonical class of the lattice spanned by the columns of m.
VertexClass canonicalize(const MatrixRF& m);
VertexClass canonicalize(const MatrixFp& m);

/// Sorted elementary-divisor exponents (0 = d1 <= d2 <= d3) of M1^-1 M2.
struct RelPosition {
  std::array<int, 3> exponents{0, 0, 0};

  bool equal() const { return exponents == std::array<int, 3>{0, 0, 0}; }
  /// (0,0,1) or (0,1,1).
  bool adjacent() const {
    return exponents == std::array<int, 3>{0, 0, 1} || exponents == std::array<int, 3>{0, 1, 1};
  }
  std::string to_string() const;
  friend bool operator==(const RelPosition&, const RelPosition&) = default;
};

RelPosition relative_position(const VertexClass& v1, const VertexClass& v2);
inline bool adjacent(const VertexClass& v1, const VertexClass& v2) { return relative_position(v1, v2).adjacent(); }

/// g . [L] = [g L].
VertexClass apply(const MatrixFp& g, const VertexClass& v);

/// If g fixes v, returns the unit alpha in GL_3(O) with g M = pi^k M alpha
/// (M the canonical basis of v); otherwise nullopt.
std::optional<MatrixFp> stabilizing_unit(const MatrixFp& g, const VertexClass& v);

/// True iff the three classes admit representatives pi L0 < L2 < L1 < L0 (in some order).
bool is_chamber(const VertexClass& v0, const VertexClass& v1, const VertexClass& v2);

}  // namespace burau

template <>
struct std::hash<burau::VertexClass> {
  std::size_t operator()(const burau::VertexClass& v) const { return v.hash(); }
};
