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
#include <memory>
#include <mutex>
#include <utility>

#include "burau/arith/matrix.hpp"
#include "burau/rep/burau.hpp"
#include "burau/rep/constants.hpp"
#include "burau/rep/word.hpp"

namespace burau {

class UndefinedLetter : public Error {
 public:
  using Error::Error;
};

/// Resolves letters to matrices and evaluates words left to right.
///
/// Over F_p every letter is available at its home prime (u, h, u1, alpha_k and
/// M19 at p = 3; beta2 at p = 5; the braid letters everywhere). Over Z only
/// s1, s2, s3, x and y are defined.
template <class Ring>
class WordEvaluator {
 public:
  using Matrix = Mat3<Laurent<Ring>>;

  explicit WordEvaluator(Ring ring, const ConstantSet& constants = ConstantSet::builtin());

  const Ring& ring() const { return ring_; }
  const ConstantSet& constants() const { return *constants_; }

  /// Matrix of a single generator (power ignored).
  const Matrix& generator(Symbol symbol, int index = 0) const;
  const Matrix& generator_inverse(Symbol symbol, int index = 0) const;
  Matrix letter(const Letter& l) const;

  Matrix evaluate(const GroupWord& w) const;
  Matrix evaluate(std::string_view text) const { return evaluate(GroupWord::parse(text)); }

 private:
  using Key = std::pair<int, int>;
  Matrix build(Symbol symbol, int index) const;

  Ring ring_;
  const ConstantSet* constants_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<Key, std::pair<Matrix, Matrix>> cache_;
};

using EvaluatorFp = WordEvaluator<ModP>;
using EvaluatorZ = WordEvaluator<Integers>;

extern template class WordEvaluator<ModP>;
extern template class WordEvaluator<Integers>;

}  // namespace burau
