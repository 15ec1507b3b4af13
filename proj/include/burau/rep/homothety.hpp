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

#include "burau/arith/matrix.hpp"

namespace burau {

/// Witness that a matrix equals c * var^k * I.
template <class Ring>
struct Homothety {
  typename Ring::value_type coeff;
  int exponent = 0;
};

template <class Ring>
std::optional<Homothety<Ring>> is_homothety(const Mat3<Laurent<Ring>>& a) {
  const Laurent<Ring>& d = a(0, 0);
  if (!d.is_monomial()) return std::nullopt;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        if (!(a(i, i) == d)) return std::nullopt;
      } else if (!a(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  return Homothety<Ring>{d.leading_coeff(), d.min_exp()};
}

/// Order of A modulo homotheties, bounded search.
struct OrderResult {
  std::optional<int> order;
  int bound = 0;

  bool exceeded() const { return !order.has_value(); }
  std::string to_string() const;
};

OrderResult order_mod_homothety(const MatrixFp& a, int max_n);

/// Representative of A's class modulo nonzero scalars c*t^k: the first nonzero
/// entry (row-major) is made monic with top exponent 0.
MatrixFp normalize_mod_homothety(const MatrixFp& a);

/// Stable text key of a matrix (used for hashing group elements).
std::string matrix_key(const MatrixFp& a);

}  // namespace burau
