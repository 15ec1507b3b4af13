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

#include "burau/arith/matrix.hpp"

namespace burau {

/// The Squier form over F_p[s, 1/s]:
///   [[-(s+1/s), 1/s, 0], [s, -(s+1/s), 1/s], [0, s, -(s+1/s)]]
MatrixFp squier_form(const ModP& ring);

/// Lifts a t-matrix to the s-ring (t = s^2); s-matrices pass through.
MatrixFp as_s_matrix(const MatrixFp& a);

/// A* J A - J, computed over the s-ring.
MatrixFp unitarity_residual(const MatrixFp& a);

/// True iff A* J A = J, where (a_ij)* = bar(a_ji) and bar: s -> 1/s.
bool is_unitary(const MatrixFp& a);

/// The pulled-back form M* J M over the s-ring.
MatrixFp pulled_back_form(const MatrixFp& m);

}  // namespace burau
