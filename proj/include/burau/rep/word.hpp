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

#include <string>
#include <string_view>
#include <vector>

namespace burau {

enum class Symbol { sigma1, sigma2, sigma3, x, y, u, h, u1, alpha, beta2, m19 };

/// A generator raised to a nonzero power. `index` is k for alpha_k.
struct Letter {
  Symbol symbol = Symbol::x;
  int index = 0;
  int power = 1;

  std::string name() const;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word over named generators, evaluated left to right.
///
/// Text grammar: letters joined by `.`, each `name` or `name^k`, with
/// parenthesised sub-words `(y.x.y)^-1`. Names: `s1 s2 s3 x y u h u1 a<k>
/// alpha<k> b2 beta2 M19`, the macro `w` (= u^-1.x^-1.y^-1.x.y.x.y), and the
/// inverse spellings `x̄ ȳ X Y`.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static GroupWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Number of letters counting x^3 as three.
  int letter_count() const;

  GroupWord inverse() const;
  GroupWord power(int n) const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  /// Commutator [a, b] = a^-1 b^-1 a b.
  static GroupWord commutator(const GroupWord& a, const GroupWord& b);

  /// True iff every letter is one of s1 s2 s3 x y (defined in the integral representation).
  bool is_braid_word() const;

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

}  // namespace burau
