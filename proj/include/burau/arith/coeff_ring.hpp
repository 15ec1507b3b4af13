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
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "burau/arith/errors.hpp"

namespace burau {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(long n);

/// Coefficient ring F_p, carried by value inside every polynomial.
///
/// A default-constructed ModP is *unbound* (modulus 0): it holds plain small
/// integers and adopts the modulus of whatever bound operand it is combined
/// with. This is what lets Eigen build `Scalar(0)` and `Scalar(1)` without
/// knowing the prime.
class ModP {
 public:
  using value_type = std::int32_t;

  constexpr ModP() = default;
  explicit ModP(long p);

  constexpr long modulus() const { return p_; }
  constexpr bool bound() const { return p_ != 0; }

  value_type reduce(long long v) const {
    if (p_ == 0) return static_cast<value_type>(v);
    long long r = v % p_;
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const { return reduce(static_cast<long long>(a) + b); }
  value_type sub(value_type a, value_type b) const { return reduce(static_cast<long long>(a) - b); }
  value_type mul(value_type a, value_type b) const { return reduce(static_cast<long long>(a) * b); }
  value_type neg(value_type a) const { return reduce(-static_cast<long long>(a)); }
  value_type inv(value_type a) const;
  static bool is_zero(value_type a) { return a == 0; }
  static bool is_one(value_type a) { return a == 1; }

  /// Common ring of two operands; throws ModulusMismatch for two different bound primes.
  static ModP unify(const ModP& a, const ModP& b) {
    if (a.p_ == b.p_ || b.p_ == 0) return a;
    if (a.p_ == 0) return b;
    throw ModulusMismatch(a.p_, b.p_);
  }

  friend bool operator==(const ModP&, const ModP&) = default;

  static std::string to_string(value_type v) { return std::to_string(v); }

 private:
  long p_ = 0;
};

/// Characteristic-zero coefficients (integral Burau).
class Integers {
 public:
  using value_type = BigInt;

  value_type reduce(const BigInt& v) const { return v; }
  value_type reduce(long long v) const { return BigInt(v); }
  value_type add(const BigInt& a, const BigInt& b) const { return a + b; }
  value_type sub(const BigInt& a, const BigInt& b) const { return a - b; }
  value_type mul(const BigInt& a, const BigInt& b) const { return a * b; }
  value_type neg(const BigInt& a) const { return -a; }
  /// Only the units +-1 are invertible.
  value_type inv(const BigInt& a) const {
    if (a == 1 || a == -1) return a;
    throw NotDivisible("integer " + a.str() + " is not a unit");
  }
  static bool is_zero(const BigInt& a) { return a.is_zero(); }
  static bool is_one(const BigInt& a) { return a == 1; }
  static Integers unify(const Integers&, const Integers&) { return {}; }
  constexpr bool bound() const { return true; }
  constexpr long modulus() const { return 0; }

  friend bool operator==(const Integers&, const Integers&) = default;

  static std::string to_string(const BigInt& v) { return v.str(); }
};

}  // namespace burau
