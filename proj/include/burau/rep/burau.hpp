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

#include "burau/arith/matrix.hpp"

namespace burau {

/// One of the eight textbook variants of the reduced Burau matrices, obtained by
/// optionally transposing, inverting and substituting t -> 1/t in each generator.
struct BurauConvention {
  bool transpose = false;
  bool invert = false;
  bool swap_t = false;

  std::string name() const;
  static std::optional<BurauConvention> from_name(const std::string& name);
  friend bool operator==(const BurauConvention&, const BurauConvention&) = default;
};

/// All eight variants, textbook first.
std::array<BurauConvention, 8> standard_conventions();

/// Textbook reduced Burau matrix of sigma_i (i = 1, 2, 3) for B_4:
///   s1 = [[-t, 1, 0], [0, 1, 0], [0, 0, 1]]
///   s2 = [[1, 0, 0], [t, -t, 1], [0, 0, 1]]
///   s3 = [[1, 0, 0], [0, 1, 0], [0, t, -t]]
template <class Ring>
Mat3<Laurent<Ring>> textbook_generator(int i, const Ring& ring) {
  using L = Laurent<Ring>;
  if (i < 1 || i > 3) throw DomainError("braid generator index must be 1, 2 or 3");
  Mat3<L> m = identity(ring);
  const L t = L::variable(ring);
  const int k = i - 1;
  m(k, k) = -t;
  if (k > 0) m(k, k - 1) = t;
  if (k < 2) m(k, k + 1) = L::constant(ring, 1);
  return m;
}

template <class Ring>
Mat3<Laurent<Ring>> burau_generator(int i, const Ring& ring, const BurauConvention& conv = {}) {
  Mat3<Laurent<Ring>> m = textbook_generator(i, ring);
  if (conv.transpose) m = m.transpose().eval();
  if (conv.invert) m = inverse_laurent(m);
  if (conv.swap_t) m = bar(m);
  return m;
}

/// True iff all three generators of the convention are J-unitary mod p.
bool convention_is_unitary(const BurauConvention& conv, const ModP& ring);

/// First variant (in standard_conventions() order) whose generators are J-unitary.
std::optional<BurauConvention> select_convention(const ModP& ring);

}  // namespace burau
