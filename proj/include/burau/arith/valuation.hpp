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

#include <compare>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

namespace burau {

/// Discrete valuation value: an integer, or +infinity for zero.
class Valuation {
 public:
  constexpr Valuation() = default;  // +infinity
  constexpr Valuation(int v) : value_(v) {}  // NOLINT: implicit by design of the value type

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr int value() const { return *value_; }

  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Valuation(a.value() + b.value());
  }
  friend constexpr bool operator==(Valuation a, Valuation b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return a.value() <=> b.value();
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }
  friend std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.to_string(); }

 private:
  std::optional<int> value_;
};

inline Valuation min(Valuation a, Valuation b) { return a <= b ? a : b; }

}  // namespace burau
