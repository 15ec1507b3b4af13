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

#include <algorithm>

#include "burau/arith/coeff_ring.hpp"
#include "burau/arith/laurent.hpp"
#include "burau/arith/ratfunc.hpp"

namespace burau {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModP::ModP(long p) : p_(p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

ModP::value_type ModP::inv(value_type a) const {
  if (p_ == 0) {
    if (a == 1 || a == -1) return a;
    throw NotDivisible("inverse of an unbound integer constant");
  }
  a = reduce(a);
  if (a == 0) throw DivisionByZero();
  // Fermat: a^(p-2).
  long long result = 1, base = a;
  long e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

LaurentFp reduce_mod(const LaurentZ& x, const ModP& ring) {
  std::vector<ModP::value_type> c;
  c.reserve(x.coeffs().size());
  const BigInt p(ring.modulus());
  for (const auto& v : x.coeffs()) {
    BigInt r = v % p;
    if (r < 0) r += p;
    c.push_back(static_cast<ModP::value_type>(r));
  }
  return LaurentFp(ring, x.var(), x.min_exp(), std::move(c));
}

std::pair<LaurentFp, LaurentFp> poly_divmod(const LaurentFp& a, const LaurentFp& b) {
  if (b.is_zero()) throw DivisionByZero();
  const ModP ring = ModP::unify(a.ring(), b.ring());
  if ((!a.is_zero() && a.min_exp() < 0) || b.min_exp() < 0)
    throw DomainError("poly_divmod requires polynomials");
  const Var var = a.is_constant() ? b.var() : a.var();
  if (a.is_zero() || a.max_exp() < b.max_exp()) return {LaurentFp(ring, var, 0, {}), a.bind(ring)};
  // Dense coefficient arrays indexed by exponent.
  std::vector<ModP::value_type> rem(static_cast<std::size_t>(a.max_exp() + 1), 0);
  for (int e = a.min_exp(); e <= a.max_exp(); ++e) rem[static_cast<std::size_t>(e)] = ring.reduce(a.coeff(e));
  const int db = b.max_exp();
  const auto lead_inv = ring.inv(ring.reduce(b.leading_coeff()));
  std::vector<ModP::value_type> q(static_cast<std::size_t>(a.max_exp() - db + 1), 0);
  for (int k = a.max_exp() - db; k >= 0; --k) {
    const auto f = ring.mul(rem[static_cast<std::size_t>(k + db)], lead_inv);
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int e = b.min_exp(); e <= db; ++e) {
      auto& slot = rem[static_cast<std::size_t>(k + e)];
      slot = ring.sub(slot, ring.mul(f, ring.reduce(b.coeff(e))));
    }
  }
  return {LaurentFp(ring, var, 0, std::move(q)), LaurentFp(ring, var, 0, std::move(rem))};
}

namespace {

LaurentFp make_monic(const LaurentFp& a) {
  if (a.is_zero()) return a;
  const auto inv = a.ring().inv(a.leading_coeff());
  return a * LaurentFp::constant(a.ring(), inv, a.var());
}

}  // namespace

LaurentFp poly_gcd(LaurentFp a, LaurentFp b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const LaurentFp& x) {
  if (x.is_zero() || x.min_exp() >= 0) {
    num_ = x;
    den_ = LaurentFp(1).bind(x.ring()).with_var(x.var());
  } else {
    num_ = x.shifted(-x.min_exp());
    den_ = LaurentFp::monomial(x.ring(), x.var(), 1, -x.min_exp());
  }
}

RatFunc::RatFunc(const LaurentFp& num, const LaurentFp& den) {
  if (den.is_zero()) throw DivisionByZero();
  const ModP ring = ModP::unify(num.ring(), den.ring());
  const Var var = num.is_constant() ? den.var() : num.var();
  if (num.is_zero()) {
    num_ = LaurentFp(ring, var, 0, {});
    den_ = LaurentFp(1).bind(ring).with_var(var);
    return;
  }
  if (!ring.bound()) {
    // Only +-1 / +-1 style constants can appear without a modulus.
    *this = RatFunc(num / den);
    return;
  }
  LaurentFp n = num.bind(ring).shifted(-num.min_exp());
  LaurentFp d = den.bind(ring).shifted(-den.min_exp());
  const int extra = num.min_exp() - den.min_exp();
  if (extra > 0) n = n.shifted(extra);
  if (extra < 0) d = d.shifted(-extra);
  if (!d.is_constant()) {
    const LaurentFp g = poly_gcd(n, d);
    if (!g.is_constant()) {
      n = poly_divmod(n, g).first;
      d = poly_divmod(d, g).first;
    }
  }
  const auto inv = ring.inv(d.leading_coeff());
  if (inv != 1) {
    const auto c = LaurentFp::constant(ring, inv, var);
    n = n * c;
    d = d * c;
  }
  num_ = n.with_var(var);
  den_ = d.with_var(var);
}

LaurentFp RatFunc::to_laurent() const {
  if (!den_.is_monomial()) throw DomainError("rational function " + to_string() + " is not a Laurent polynomial");
  return num_.shifted(-den_.max_exp());
}

Valuation RatFunc::valuation() const {
  if (is_zero()) return Valuation::infinity();
  return Valuation(den_.max_exp() - num_.max_exp());
}

RatFunc RatFunc::bar() const {
  if (is_zero()) return *this;
  return RatFunc(num_.bar(), den_.bar());
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) {
      LaurentFp n = a.num_ + b.num_;
      if (n.is_zero()) return RatFunc(n, a.den_);
      return RatFunc(n, a.den_.bind(n.ring()).with_var(n.var()), RatFunc::Normalized{});
    }
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  if (a.den_.is_constant() && b.den_.is_constant()) {
    LaurentFp n = a.num_ * b.num_;
    return RatFunc(n, LaurentFp(1).bind(n.ring()).with_var(n.var()), RatFunc::Normalized{});
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero();
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const LaurentFp& x) {
    return x.term_count() > 1 ? "(" + x.to_string() + ")" : x.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

// ---------------------------------------------------------------- pi-adic

LaurentFp uniformizer(const ModP& ring) { return pi_power(ring, 1); }

LaurentFp pi_power(const ModP& ring, int k) { return LaurentFp::monomial(ring, Var::t, 1, -k); }

std::vector<ModP::value_type> pi_adic_expand(const RatFunc& x, int k) {
  if (k < 0) throw DomainError("negative digit count");
  std::vector<ModP::value_type> digits(static_cast<std::size_t>(k), 0);
  if (x.is_zero()) return digits;
  const Valuation v = x.valuation();
  if (v.value() < 0) throw DomainError("pi-adic expansion of " + x.to_string() + " outside the valuation ring");
  const ModP& ring = x.ring();
  const LaurentFp& num = x.num();
  const LaurentFp& den = x.den();
  // With t = 1/pi: x = pi^v * rev(num)(pi) / rev(den)(pi), rev(den)(0) = 1.
  const int dn = num.max_exp();
  const int dd = den.max_exp();
  auto rev = [&](const LaurentFp& p, int deg, int j) { return ring.reduce(p.coeff(deg - j)); };
  const int need = k - v.value();
  std::vector<ModP::value_type> q(static_cast<std::size_t>(std::max(need, 0)), 0);
  for (int j = 0; j < need; ++j) {
    long long acc = rev(num, dn, j);
    for (int i = 1; i <= j && i <= dd; ++i) acc -= static_cast<long long>(rev(den, dd, i)) * q[static_cast<std::size_t>(j - i)];
    q[static_cast<std::size_t>(j)] = ring.reduce(acc);
  }
  for (int j = 0; j < need; ++j) digits[static_cast<std::size_t>(j + v.value())] = q[static_cast<std::size_t>(j)];
  return digits;
}

LaurentFp pi_adic_value(const ModP& ring, const std::vector<ModP::value_type>& digits) {
  if (digits.empty()) return LaurentFp(ring, Var::t, 0, {});
  std::vector<ModP::value_type> c(digits.rbegin(), digits.rend());
  return LaurentFp(ring, Var::t, -static_cast<int>(digits.size()) + 1, std::move(c));
}

}  // namespace burau
