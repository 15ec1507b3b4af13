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
#include <string>
#include <string_view>
#include <vector>

#include "burau/arith/matrix.hpp"
#include "burau/rep/burau.hpp"
#include "burau/rep/word.hpp"

namespace burau {

/// A named matrix from the constants file. `home_prime` 0 means "any prime".
struct MatrixConstant {
  std::string name;
  long home_prime = 0;
  std::string text;
};

/// Text file of named matrices and words plus the selected Burau convention.
///
///     # comment
///     convention textbook
///     matrix u p=3 [[2+t+t^2, ...], [...], [...]]
///     matrix M19printed p=any [[1, 0, t], [0, t, 0], [0, 0, t]]
///     word kernel x̄.ȳ.x̄.y ...
class ConstantSet {
 public:
  /// The compiled-in constants (identical to data/constants.txt).
  static const ConstantSet& builtin();
  static const std::string& builtin_text();

  static ConstantSet parse(std::string_view text);
  static ConstantSet load(const std::string& path);
  std::string serialize() const;

  const BurauConvention& convention() const { return convention_; }

  bool has_matrix(std::string_view name) const;
  const MatrixConstant& matrix_entry(std::string_view name) const;
  /// The named matrix over F_p; throws WrongPrime when p is not the constant's home prime.
  MatrixFp matrix(std::string_view name, const ModP& ring) const;

  /// The word exactly as stored (e.g. the kernel relator with x̄ / ȳ letters).
  const std::string& word_text(std::string_view name) const;
  GroupWord word(std::string_view name) const { return GroupWord::parse(word_text(name)); }

  /// Re-checks that u, h and beta2 are J-unitary with orders 6, 3 and 4 modulo
  /// homothety. Returns a description of every failure (empty when valid).
  std::vector<std::string> validation_errors() const;
  /// Throws ConstantsError listing validation_errors() when non-empty.
  void validate() const;

  const std::vector<MatrixConstant>& matrices() const { return matrices_; }

 private:
  BurauConvention convention_{};
  std::vector<MatrixConstant> matrices_;
  std::vector<std::pair<std::string, std::string>> words_;
  std::vector<std::string> header_comments_;
};

class WrongPrime : public Error {
 public:
  using Error::Error;
};

class ConstantsError : public Error {
 public:
  using Error::Error;
};

}  // namespace burau
