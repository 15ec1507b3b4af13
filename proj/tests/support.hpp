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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "burau/arith/matrix.hpp"
#include "burau/arith/ratfunc.hpp"

namespace burau::testing {

/// Seed for randomized tests: --seed=N on the command line or $BURAU_SEED.
std::uint64_t seed();

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

/// Random Laurent polynomial with exponents in [lo, hi]; may be zero.
inline LaurentFp random_laurent(std::mt19937_64& g, const ModP& ring, int lo = -3, int hi = 3) {
  std::vector<ModP::value_type> c(static_cast<std::size_t>(hi - lo + 1));
  for (auto& x : c) x = uniform(g, 0, static_cast<int>(ring.modulus()) - 1);
  return LaurentFp(ring, Var::t, lo, std::move(c));
}

inline LaurentFp random_nonzero_laurent(std::mt19937_64& g, const ModP& ring, int lo = -3, int hi = 3) {
  for (;;) {
    LaurentFp x = random_laurent(g, ring, lo, hi);
    if (!x.is_zero()) return x;
  }
}

inline RatFunc random_ratfunc(std::mt19937_64& g, const ModP& ring) {
  return RatFunc(random_laurent(g, ring, 0, 3), random_nonzero_laurent(g, ring, 0, 3));
}

/// Polynomial in pi = 1/t of degree <= deg: an element of O.
inline LaurentFp random_integral(std::mt19937_64& g, const ModP& ring, int deg = 2) {
  return random_laurent(g, ring, -deg, 0);
}

/// Random product of elementary column operations over O: an element of GL_3(O).
inline MatrixFp random_unit(std::mt19937_64& g, const ModP& ring, int steps = 6) {
  MatrixFp e = identity(ring);
  for (int s = 0; s < steps; ++s) {
    MatrixFp op = identity(ring);
    switch (uniform(g, 0, 2)) {
      case 0: {  // add an O-multiple of one column to another
        const int i = uniform(g, 0, 2), j = (i + uniform(g, 1, 2)) % 3;
        op(i, j) = random_integral(g, ring);
        break;
      }
      case 1: {  // scale a column by a nonzero constant
        const int i = uniform(g, 0, 2);
        op(i, i) = LaurentFp::constant(ring, uniform(g, 1, static_cast<int>(ring.modulus()) - 1));
        break;
      }
      default: {  // swap two columns
        const int i = uniform(g, 0, 2), j = (i + uniform(g, 1, 2)) % 3;
        op(i, i) = op(j, j) = LaurentFp(ring, Var::t, 0, {});
        op(i, j) = op(j, i) = LaurentFp::constant(ring, 1);
      }
    }
    e = (e * op).eval();
  }
  return e;
}

/// Random matrix with nonzero determinant, entries with t-exponents in [lo, hi].
inline MatrixFp random_invertible(std::mt19937_64& g, const ModP& ring, int lo = -2, int hi = 2) {
  for (;;) {
    MatrixFp m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = random_laurent(g, ring, lo, hi);
    if (!det3(m).is_zero()) return m;
  }
}

/// Random word over the given letters with 1..max_len letters.
inline std::string random_word(std::mt19937_64& g, const std::vector<std::string>& letters, int max_len) {
  const int n = uniform(g, 1, max_len);
  std::string w;
  for (int i = 0; i < n; ++i) {
    if (i) w += '.';
    w += letters[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(letters.size()) - 1))];
  }
  return w;
}

}  // namespace burau::testing
