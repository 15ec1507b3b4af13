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

#include <string_view>

#include "burau/arith/matrix.hpp"

namespace burau {

/// Parses `c*t^k` terms joined by `+` / `-`, e.g. `2+t+t^2` or `t^-1+2*t^3`.
/// Negative powers are written `s^-1`; `1/s` is rejected. The variable is
/// inferred from the text and constants default to t.
template <class Ring>
Laurent<Ring> parse_laurent(std::string_view text, const Ring& ring);

/// Parses `[[a, b, c], [d, e, f], [g, h, i]]`.
template <class Ring>
Mat3<Laurent<Ring>> parse_matrix(std::string_view text, const Ring& ring);

}  // namespace burau
