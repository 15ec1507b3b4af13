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

#include "burau/rep/evaluate.hpp"

namespace burau {

template <class Ring>
WordEvaluator<Ring>::WordEvaluator(Ring ring, const ConstantSet& constants)
    : ring_(std::move(ring)), constants_(&constants) {}

template <class Ring>
typename WordEvaluator<Ring>::Matrix WordEvaluator<Ring>::build(Symbol symbol, int index) const {
  const BurauConvention& conv = constants_->convention();
  switch (symbol) {
    case Symbol::sigma1: return burau_generator(1, ring_, conv);
    case Symbol::sigma2: return burau_generator(2, ring_, conv);
    case Symbol::sigma3: return burau_generator(3, ring_, conv);
    case Symbol::x: return (generator(Symbol::sigma1) * generator(Symbol::sigma2) * generator(Symbol::sigma3)).eval();
    case Symbol::y: return (generator(Symbol::x) * generator(Symbol::sigma1)).eval();
    default: break;
  }
  if constexpr (std::is_same_v<Ring, Integers>) {
    throw UndefinedLetter("letter '" + Letter{symbol, index, 1}.name() + "' is not defined integrally");
  } else {
    switch (symbol) {
      case Symbol::u: return constants_->matrix("u", ring_);
      case Symbol::h: return constants_->matrix("h", ring_);
      case Symbol::beta2: return constants_->matrix("beta2", ring_);
      case Symbol::m19: return constants_->matrix("M19", ring_);
      case Symbol::u1: {
        // u1 = (xyx)^-1 . u . xyx
        const Matrix xyx = evaluate(GroupWord::parse("x.y.x"));
        return (inverse_laurent(xyx) * generator(Symbol::u) * xyx).eval();
      }
      case Symbol::alpha: {
        // alpha_{i+1} = (xyx)^-i . u . u1 . (xyx)^i
        const int i = index - 1;
        const Matrix conj = evaluate(GroupWord::parse("x.y.x").power(i));
        return (inverse_laurent(conj) * generator(Symbol::u) * generator(Symbol::u1) * conj).eval();
      }
      default: break;
    }
    throw UndefinedLetter("letter '" + Letter{symbol, index, 1}.name() + "' has no matrix");
  }
}

template <class Ring>
const typename WordEvaluator<Ring>::Matrix& WordEvaluator<Ring>::generator(Symbol symbol, int index) const {
  const Key key{static_cast<int>(symbol), index};
  std::lock_guard lock(mutex_);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    Matrix m = build(symbol, index);
    Matrix inv = inverse_laurent(m);
    it = cache_.emplace(key, std::make_pair(std::move(m), std::move(inv))).first;
  }
  return it->second.first;
}

template <class Ring>
const typename WordEvaluator<Ring>::Matrix& WordEvaluator<Ring>::generator_inverse(Symbol symbol, int index) const {
  std::lock_guard lock(mutex_);
  generator(symbol, index);
  return cache_.at(Key{static_cast<int>(symbol), index}).second;
}

template <class Ring>
typename WordEvaluator<Ring>::Matrix WordEvaluator<Ring>::letter(const Letter& l) const {
  const Matrix& base = l.power > 0 ? generator(l.symbol, l.index) : generator_inverse(l.symbol, l.index);
  Matrix out = base;
  for (int k = 1; k < (l.power > 0 ? l.power : -l.power); ++k) out = (out * base).eval();
  return out;
}

template <class Ring>
typename WordEvaluator<Ring>::Matrix WordEvaluator<Ring>::evaluate(const GroupWord& w) const {
  Matrix out = identity(ring_);
  for (const auto& l : w.letters()) out = (out * letter(l)).eval();
  return out;
}

template class WordEvaluator<ModP>;
template class WordEvaluator<Integers>;

}  // namespace burau
