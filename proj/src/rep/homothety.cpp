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

#include "burau/rep/homothety.hpp"

namespace burau {

std::string OrderResult::to_string() const {
  return order ? std::to_string(*order) : "exceeds(" + std::to_string(bound) + ")";
}

OrderResult order_mod_homothety(const MatrixFp& a, int max_n) {
  if (max_n < 1) throw DomainError("order bound must be >= 1");
  MatrixFp power = a;
  for (int n = 1; n <= max_n; ++n) {
    if (is_homothety(power)) return {n, max_n};
    if (n < max_n) power = (power * a).eval();
  }
  return {std::nullopt, max_n};
}

MatrixFp normalize_mod_homothety(const MatrixFp& a) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const LaurentFp& e = a(i, j);
      if (e.is_zero()) continue;
      const ModP& ring = e.ring();
      const LaurentFp scale = LaurentFp::monomial(ring, e.var(), ring.inv(e.leading_coeff()), -e.max_exp());
      return (a * scale).eval();
    }
  throw DomainError("zero matrix has no homothety class");
}

std::string matrix_key(const MatrixFp& a) { return to_string(a); }

}  // namespace burau
