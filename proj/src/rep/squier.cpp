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

#include "burau/rep/squier.hpp"

namespace burau {

MatrixFp squier_form(const ModP& ring) {
  const LaurentFp s = LaurentFp::variable(ring, Var::s);
  const LaurentFp s_inv = LaurentFp::monomial(ring, Var::s, 1, -1);
  const LaurentFp diag = -(s + s_inv);
  const LaurentFp zero(ring, Var::s, 0, {});
  MatrixFp j;
  j << diag, s_inv, zero,
       s, diag, s_inv,
       zero, s, diag;
  return j;
}

MatrixFp as_s_matrix(const MatrixFp& a) {
  return a.unaryExpr([](const LaurentFp& x) { return x.var() == Var::s ? x : to_s_ring(x); });
}

MatrixFp unitarity_residual(const MatrixFp& a) {
  const MatrixFp as = as_s_matrix(a);
  ModP ring;
  for (int i = 0; i < 9; ++i) ring = ModP::unify(ring, as(i / 3, i % 3).ring());
  const MatrixFp j = squier_form(ring);
  return (star(as) * j * as - j).eval();
}

bool is_unitary(const MatrixFp& a) {
  const MatrixFp r = unitarity_residual(a);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (!r(i, k).is_zero()) return false;
  return true;
}

MatrixFp pulled_back_form(const MatrixFp& m) {
  const MatrixFp ms = as_s_matrix(m);
  ModP ring;
  for (int i = 0; i < 9; ++i) ring = ModP::unify(ring, ms(i / 3, i % 3).ring());
  return (star(ms) * squier_form(ring) * ms).eval();
}

}  // namespace burau
