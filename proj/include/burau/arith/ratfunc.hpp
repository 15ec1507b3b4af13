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

#include <ostream>
#include <string>
#include <vector>

#include "burau/arith/laurent.hpp"
#include "burau/arith/valuation.hpp"

namespace burau {

/// Rational function over F_p in one variable, kept fully reduced.
///
/// Invariants: numerator and denominator are polynomials (no negative
/// exponents), gcd(num, den) = 1, den is monic, and zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}  // NOLINT: implicit for Eigen's Scalar(0) / Scalar(1)
  RatFunc(const LaurentFp& x);          // NOLINT: Laurent polynomials embed implicitly
  RatFunc(const LaurentFp& num, const LaurentFp& den);

  const LaurentFp& num() const { return num_; }
  const LaurentFp& den() const { return den_; }
  const ModP& ring() const { return num_.ring().bound() ? num_.ring() : den_.ring(); }
  Var var() const { return num_.is_constant() ? den_.var() : num_.var(); }

  bool is_zero() const { return num_.is_zero(); }
  /// True iff the denominator is a monomial, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }
  /// The value as a Laurent polynomial; throws DomainError when the denominator is not a monomial.
  LaurentFp to_laurent() const;

  /// nu(num/den) = deg(den) - deg(num); +inf for zero.
  Valuation valuation() const;

  /// The involution var -> 1/var.
  RatFunc bar() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

 private:
  struct Normalized {};
  RatFunc(LaurentFp num, LaurentFp den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  LaurentFp num_;
  LaurentFp den_;
};

/// The uniformizer pi = 1/t of the valuation ring at infinity.
LaurentFp uniformizer(const ModP& ring);
/// pi^k = t^(-k).
LaurentFp pi_power(const ModP& ring, int k);

/// First k pi-adic digits of x (digit j is the coefficient of pi^j, pi = 1/t).
/// Requires valuation(x) >= 0; throws DomainError otherwise.
std::vector<ModP::value_type> pi_adic_expand(const RatFunc& x, int k);

/// Sum of digits[j] * pi^j as a Laurent polynomial in t.
LaurentFp pi_adic_value(const ModP& ring, const std::vector<ModP::value_type>& digits);

}  // namespace burau
