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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "burau/arith/coeff_ring.hpp"
#include "burau/arith/errors.hpp"
#include "burau/arith/valuation.hpp"

namespace burau {

/// Polynomial variable. `s` is a square root of `t`.
enum class Var : std::uint8_t { t, s };

inline char var_name(Var v) { return v == Var::t ? 't' : 's'; }

/// Laurent polynomial over a coefficient ring, in one variable (t or s).
///
/// Storage is canonical: `coeffs_` is empty iff the value is zero, otherwise
/// its first and last entries are nonzero and `coeffs_[i]` is the coefficient
/// of `var^(min_exp_ + i)`.
template <class Ring>
class Laurent {
 public:
  using ring_type = Ring;
  using coeff_type = typename Ring::value_type;

  Laurent() = default;
  Laurent(int c)  // NOLINT: implicit so that Eigen can build Scalar(0) / Scalar(1)
      : coeffs_{ring_.reduce(static_cast<long long>(c))} {
    trim();
  }
  Laurent(Ring ring, Var var, int min_exp, std::vector<coeff_type> coeffs)
      : ring_(std::move(ring)), var_(var), min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = ring_.reduce(c);
    trim();
  }

  static Laurent constant(const Ring& ring, coeff_type c, Var var = Var::t) {
    return Laurent(ring, var, 0, {std::move(c)});
  }
  static Laurent monomial(const Ring& ring, Var var, coeff_type c, int exp) {
    return Laurent(ring, var, exp, {std::move(c)});
  }
  static Laurent variable(const Ring& ring, Var var = Var::t) { return monomial(ring, var, coeff_type(1), 1); }

  const Ring& ring() const { return ring_; }
  Var var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Zero or a pure constant: such values are compatible with either variable.
  bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && min_exp_ == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<coeff_type>& coeffs() const { return coeffs_; }
  std::size_t term_count() const { return coeffs_.size(); }

  coeff_type coeff(int e) const {
    if (e < min_exp_ || e > max_exp() || coeffs_.empty()) return coeff_type(0);
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
  }
  const coeff_type& leading_coeff() const { return coeffs_.back(); }
  const coeff_type& trailing_coeff() const { return coeffs_.front(); }

  /// Same value with the given ring (binds an unbound constant to a modulus).
  Laurent bind(const Ring& ring) const {
    Laurent r(Ring::unify(ring, ring_), var_, min_exp_, coeffs_);
    return r;
  }
  Laurent with_var(Var v) const {
    if (v != var_ && !is_constant()) throw VariableMismatch();
    Laurent r = *this;
    r.var_ = v;
    return r;
  }

  /// Valuation -max_exp measured in the uniformizer 1/var; +inf for zero.
  Valuation valuation() const { return is_zero() ? Valuation::infinity() : Valuation(-max_exp()); }

  /// The involution var -> 1/var.
  Laurent bar() const {
    if (is_zero()) return *this;
    std::vector<coeff_type> c(coeffs_.rbegin(), coeffs_.rend());
    return Laurent(ring_, var_, -max_exp(), std::move(c));
  }

  /// Multiply by var^k.
  Laurent shifted(int k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.min_exp_ += k;
    return r;
  }

  coeff_type evaluate_at_one() const {
    coeff_type acc(0);
    for (const auto& c : coeffs_) acc = ring_.add(acc, c);
    return ring_.reduce(acc);
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& c : r.coeffs_) c = ring_.neg(c);
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, false); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return combine(a, b, true); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    const Ring ring = Ring::unify(a.ring_, b.ring_);
    const Var var = unify_var(a, b);
    if (a.is_zero() || b.is_zero()) return Laurent(ring, var, 0, {});
    std::vector<coeff_type> c(a.coeffs_.size() + b.coeffs_.size() - 1, coeff_type(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (Ring::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] = ring.add(c[i + j], ring.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Laurent(ring, var, a.min_exp_ + b.min_exp_, std::move(c));
  }

  /// Exact division in the Laurent ring; throws NotDivisible when the quotient is not Laurent.
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return exact_divide(a, b); }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    if (a.is_zero()) return true;
    if (a.min_exp_ != b.min_exp_) return false;
    if (a.var_ != b.var_ && !a.is_constant()) return false;
    if (a.ring_.bound() && b.ring_.bound() && !(a.ring_ == b.ring_)) return false;
    // Compare as elements of the common ring so unbound constants match bound ones.
    const Ring ring = a.ring_.bound() ? a.ring_ : b.ring_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (ring.reduce(a.coeffs_[i]) != ring.reduce(b.coeffs_[i])) return false;
    return true;
  }

  /// Total order used for deterministic sorting (not a ring order).
  friend bool operator<(const Laurent& a, const Laurent& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    if (a.min_exp_ != b.min_exp_) return a.min_exp_ < b.min_exp_;
    return a.coeffs_ < b.coeffs_;
  }

  /// Text form `c*t^k` joined by `+`, lowest exponent first, e.g. `2+t+t^2`.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    const char v = var_name(var_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const coeff_type& c = coeffs_[i];
      if (Ring::is_zero(c)) continue;
      const int e = min_exp_ + static_cast<int>(i);
      std::string cs = Ring::to_string(c);
      const bool negative = !cs.empty() && cs[0] == '-';
      if (!out.empty()) out += negative ? "-" : "+";
      else if (negative) out += "-";
      if (negative) cs.erase(0, 1);
      std::string term;
      if (e == 0) {
        term = cs;
      } else {
        if (cs != "1") term = cs + "*";
        term += v;
        if (e != 1) term += "^" + std::to_string(e);
      }
      out += term;
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Laurent& x) { return os << x.to_string(); }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(min_exp_) ^ (static_cast<std::size_t>(var_) << 7);
    for (const auto& c : coeffs_) {
      if constexpr (std::is_integral_v<coeff_type>)
        h = h * 1000003u ^ static_cast<std::size_t>(c);
      else
        h = h * 1000003u ^ std::hash<std::string>{}(Ring::to_string(c));
    }
    return h;
  }

 private:
  static Var unify_var(const Laurent& a, const Laurent& b) {
    if (a.var_ == b.var_) return a.var_;
    if (a.is_constant()) return b.var_;
    if (b.is_constant()) return a.var_;
    throw VariableMismatch();
  }

  static Laurent combine(const Laurent& a, const Laurent& b, bool subtract) {
    const Ring ring = Ring::unify(a.ring_, b.ring_);
    const Var var = unify_var(a, b);
    if (b.is_zero()) return Laurent(ring, var, a.min_exp_, a.coeffs_);
    if (a.is_zero()) {
      Laurent r(ring, var, b.min_exp_, b.coeffs_);
      return subtract ? -r : r;
    }
    const int lo = std::min(a.min_exp_, b.min_exp_);
    const int hi = std::max(a.max_exp(), b.max_exp());
    std::vector<coeff_type> c(static_cast<std::size_t>(hi - lo + 1), coeff_type(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[a.min_exp_ - lo + i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      auto& slot = c[b.min_exp_ - lo + i];
      slot = subtract ? ring.sub(slot, b.coeffs_[i]) : ring.add(slot, b.coeffs_[i]);
    }
    return Laurent(ring, var, lo, std::move(c));
  }

  static Laurent exact_divide(const Laurent& a, const Laurent& b) {
    const Ring ring = Ring::unify(a.ring_, b.ring_);
    const Var var = unify_var(a, b);
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return Laurent(ring, var, 0, {});
    // Long division from the top, after shifting both to start at exponent 0.
    std::vector<coeff_type> rem(a.coeffs_.begin(), a.coeffs_.end());
    for (auto& c : rem) c = ring.reduce(c);
    const std::size_t n = b.coeffs_.size();
    if (rem.size() < n) throw NotDivisible("not divisible in the Laurent ring");
    const coeff_type lead_inv = ring.inv(ring.reduce(b.coeffs_.back()));
    std::vector<coeff_type> q(rem.size() - n + 1, coeff_type(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      const coeff_type f = ring.mul(rem[k + n - 1], lead_inv);
      q[k] = f;
      if (Ring::is_zero(f)) continue;
      for (std::size_t j = 0; j < n; ++j) rem[k + j] = ring.sub(rem[k + j], ring.mul(f, b.coeffs_[j]));
    }
    for (const auto& c : rem)
      if (!Ring::is_zero(c)) throw NotDivisible("not divisible in the Laurent ring");
    return Laurent(ring, var, a.min_exp_ - b.min_exp_, std::move(q));
  }

  void trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && Ring::is_zero(coeffs_[lo])) ++lo;
    if (lo == coeffs_.size()) {
      coeffs_.clear();
      min_exp_ = 0;
      return;
    }
    std::size_t hi = coeffs_.size();
    while (Ring::is_zero(coeffs_[hi - 1])) --hi;
    if (lo > 0 || hi < coeffs_.size()) {
      coeffs_ = std::vector<coeff_type>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lo),
                                        coeffs_.begin() + static_cast<std::ptrdiff_t>(hi));
      min_exp_ += static_cast<int>(lo);
    }
  }

  Ring ring_{};
  Var var_ = Var::t;
  int min_exp_ = 0;
  std::vector<coeff_type> coeffs_;
};

using LaurentFp = Laurent<ModP>;
using LaurentZ = Laurent<Integers>;

/// t -> s^2: doubles every exponent.
template <class Ring>
Laurent<Ring> to_s_ring(const Laurent<Ring>& x) {
  if (x.var() != Var::t && !x.is_constant()) throw VariableMismatch();
  if (x.is_zero()) return x.with_var(Var::s);
  std::vector<typename Ring::value_type> c(2 * x.coeffs().size() - 1, typename Ring::value_type(0));
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) c[2 * i] = x.coeffs()[i];
  return Laurent<Ring>(x.ring(), Var::s, 2 * x.min_exp(), std::move(c));
}

/// Inverse of to_s_ring on even-exponent s-polynomials; throws DomainError on an odd exponent.
template <class Ring>
Laurent<Ring> from_s_ring(const Laurent<Ring>& x) {
  if (x.var() != Var::s && !x.is_constant()) throw VariableMismatch();
  if (x.is_zero()) return x.with_var(Var::t);
  if (x.min_exp() % 2 != 0) throw DomainError("odd power of s has no t-form");
  std::vector<typename Ring::value_type> c;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (i % 2 == 1) {
      if (!Ring::is_zero(x.coeffs()[i])) throw DomainError("odd power of s has no t-form");
      continue;
    }
    c.push_back(x.coeffs()[i]);
  }
  return Laurent<Ring>(x.ring(), Var::t, x.min_exp() / 2, std::move(c));
}

/// Reduce integral coefficients modulo p.
LaurentFp reduce_mod(const LaurentZ& x, const ModP& ring);

/// Polynomial division with remainder; both operands must be polynomials (min_exp >= 0).
std::pair<LaurentFp, LaurentFp> poly_divmod(const LaurentFp& a, const LaurentFp& b);
/// Monic gcd of two polynomials (zero only if both are zero).
LaurentFp poly_gcd(LaurentFp a, LaurentFp b);

}  // namespace burau

template <class Ring>
struct std::hash<burau::Laurent<Ring>> {
  std::size_t operator()(const burau::Laurent<Ring>& x) const { return x.hash(); }
};
