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

#include "burau/building/vertex.hpp"

#include <algorithm>
#include <sstream>

#include "burau/arith/ratfunc.hpp"

namespace burau {

namespace {

ModP common_ring(const MatrixRF& m) {
  ModP ring;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ring = ModP::unify(ring, m(i, j).ring());
  if (!ring.bound()) throw DomainError("matrix has no bound modulus");
  return ring;
}

ModP common_ring(const MatrixFp& m) {
  ModP ring;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ring = ModP::unify(ring, m(i, j).ring());
  if (!ring.bound()) throw DomainError("matrix has no bound modulus");
  return ring;
}

RatFunc monomial_rf(const ModP& ring, int exp) { return RatFunc(LaurentFp::monomial(ring, Var::t, 1, exp)); }

template <class Scalar>
Valuation min_entry_valuation(const Mat3<Scalar>& m) {
  Valuation v = Valuation::infinity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v = min(v, m(i, j).valuation());
  return v;
}

}  // namespace

VertexClass::VertexClass(long p, std::array<int, 3> exponents, std::array<std::vector<Digit>, 3> digits)
    : p_(p), exponents_(exponents), digits_(std::move(digits)) {
  if (digits_[0].size() != static_cast<std::size_t>(exponents_[1]) ||
      digits_[1].size() != static_cast<std::size_t>(exponents_[2]) ||
      digits_[2].size() != static_cast<std::size_t>(exponents_[2]))
    throw DomainError("vertex digit lists do not match the diagonal exponents");
}

VertexClass VertexClass::identity(const ModP& ring) { return VertexClass(ring.modulus(), {0, 0, 0}, {}); }

MatrixFp VertexClass::matrix() const {
  const ModP ring(p_);
  const LaurentFp zero(ring, Var::t, 0, {});
  MatrixFp m;
  m.setConstant(zero);
  for (int i = 0; i < 3; ++i) m(i, i) = pi_power(ring, exponents_[static_cast<std::size_t>(i)]);
  auto value = [&](const std::vector<Digit>& d) {
    return pi_adic_value(ring, std::vector<ModP::value_type>(d.begin(), d.end()));
  };
  m(1, 0) = value(digits_[0]);
  m(2, 0) = value(digits_[1]);
  m(2, 1) = value(digits_[2]);
  return m;
}

std::string VertexClass::to_string() const {
  std::ostringstream os;
  os << '(' << exponents_[0] << ',' << exponents_[1] << ',' << exponents_[2] << " |";
  for (std::size_t k = 0; k < 3; ++k) {
    os << (k ? " / " : " ");
    if (digits_[k].empty()) os << '-';
    for (std::size_t i = 0; i < digits_[k].size(); ++i) os << (i ? "," : "") << static_cast<int>(digits_[k][i]);
  }
  os << ')';
  return os.str();
}

VertexClass VertexClass::parse(const std::string& text, const ModP& ring) {
  auto fail = [&]() -> VertexClass { throw ParseError("bad vertex '" + text + "'"); };
  const auto open = text.find('('), bar = text.find('|'), close = text.rfind(')');
  if (open == std::string::npos || bar == std::string::npos || close == std::string::npos || bar > close) return fail();
  std::array<int, 3> exps{};
  {
    std::string head = text.substr(open + 1, bar - open - 1);
    std::replace(head.begin(), head.end(), ',', ' ');
    std::istringstream is(head);
    if (!(is >> exps[0] >> exps[1] >> exps[2])) return fail();
  }
  std::array<std::vector<Digit>, 3> digits;
  std::string tail = text.substr(bar + 1, close - bar - 1);
  std::size_t k = 0, start = 0;
  while (k < 3) {
    const auto slash = tail.find('/', start);
    std::string part = tail.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
    std::replace(part.begin(), part.end(), ',', ' ');
    std::istringstream is(part);
    std::string tok;
    while (is >> tok) {
      if (tok == "-") continue;
      const int d = std::stoi(tok);
      if (d < 0 || d >= ring.modulus()) return fail();
      digits[k].push_back(static_cast<Digit>(d));
    }
    ++k;
    if (slash == std::string::npos) break;
    start = slash + 1;
  }
  if (k != 3) return fail();
  return VertexClass(ring.modulus(), exps, std::move(digits));
}

std::size_t VertexClass::hash() const {
  std::size_t h = static_cast<std::size_t>(p_);
  for (int e : exponents_) h = h * 31 + static_cast<std::size_t>(e);
  for (const auto& d : digits_) {
    h = h * 131 + d.size();
    for (Digit x : d) h = h * 13 + x;
  }
  return h;
}

VertexClass canonicalize(const MatrixRF& m) {
  const ModP ring = common_ring(m);
  MatrixRF a = m;
  std::array<int, 3> exps{};
  for (int r = 0; r < 3; ++r) {
    int best = -1;
    Valuation best_v = Valuation::infinity();
    for (int c = r; c < 3; ++c) {
      const Valuation v = a(r, c).valuation();
      if (!v.is_infinite() && (best < 0 || v < best_v)) {
        best = c;
        best_v = v;
      }
    }
    if (best < 0) throw SingularMatrix();
    if (best != r) a.col(r).swap(a.col(best));
    const int e = best_v.value();
    // Unit scaling makes the pivot exactly pi^e.
    const RatFunc f = monomial_rf(ring, -e) / a(r, r);
    for (int i = r + 1; i < 3; ++i) a(i, r) = a(i, r) * f;
    a(r, r) = monomial_rf(ring, -e);
    for (int c = r + 1; c < 3; ++c) {
      if (a(r, c).is_zero()) continue;
      const RatFunc q = a(r, c) * monomial_rf(ring, e);  // in O
      for (int i = r + 1; i < 3; ++i) a(i, c) -= q * a(i, r);
      a(r, c) = RatFunc(0);
    }
    exps[static_cast<std::size_t>(r)] = e;
  }
  // Scale into O^3 \ pi O^3.
  const Valuation lowest = min_entry_valuation(a);
  const int shift = lowest.value();
  if (shift != 0) {
    const RatFunc s = monomial_rf(ring, shift);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j <= i; ++j) a(i, j) = a(i, j) * s;
    for (int& e : exps) e -= shift;
  }
  // Reduce below-diagonal entries modulo pi^a_i, top row first.
  for (int i = 1; i < 3; ++i) {
    const int ai = exps[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      const RatFunc& x = a(i, j);
      if (x.is_zero()) continue;
      const LaurentFp rem = pi_adic_value(ring, pi_adic_expand(x, ai));
      const RatFunc q = (x - RatFunc(rem)) * monomial_rf(ring, ai);
      if (q.is_zero()) continue;
      for (int k = i; k < 3; ++k) a(k, j) -= q * a(k, i);
    }
  }
  std::array<std::vector<VertexClass::Digit>, 3> digits;
  auto take = [&](const RatFunc& x, int len) {
    const auto d = pi_adic_expand(x, len);
    return std::vector<VertexClass::Digit>(d.begin(), d.end());
  };
  digits[0] = take(a(1, 0), exps[1]);
  digits[1] = take(a(2, 0), exps[2]);
  digits[2] = take(a(2, 1), exps[2]);
  return VertexClass(ring.modulus(), exps, std::move(digits));
}

VertexClass canonicalize(const MatrixFp& m) {
  common_ring(m);
  return canonicalize(to_ratfunc(m));
}

std::string RelPosition::to_string() const {
  return "(" + std::to_string(exponents[0]) + "," + std::to_string(exponents[1]) + "," +
         std::to_string(exponents[2]) + ")";
}

RelPosition relative_position(const VertexClass& v1, const VertexClass& v2) {
  if (v1.prime() != v2.prime()) throw ModulusMismatch(v1.prime(), v2.prime());
  const MatrixFp x = (inverse_laurent(v1.matrix()) * v2.matrix()).eval();
  const int e1 = min_entry_valuation(x).value();
  const int e12 = min_entry_valuation(adjugate(x)).value();
  const int e123 = det3(x).valuation().value();
  return RelPosition{{0, e12 - 2 * e1, e123 - e12 - e1}};
}

VertexClass apply(const MatrixFp& g, const VertexClass& v) {
  if (det3(g).is_zero()) throw SingularMatrix();
  return canonicalize((g * v.matrix()).eval());
}

std::optional<MatrixFp> stabilizing_unit(const MatrixFp& g, const VertexClass& v) {
  const MatrixFp m = v.matrix();
  const MatrixFp x = (inverse_laurent(m) * g * m).eval();
  const int k = min_entry_valuation(x).value();
  const ModP ring(v.prime());
  const MatrixFp alpha = (x * LaurentFp::monomial(ring, Var::t, 1, k)).eval();
  if (det3(alpha).valuation().value() != 0) return std::nullopt;
  return alpha;
}

namespace {

/// Column span of a contains that of b.
bool contains(const MatrixFp& a, const MatrixFp& b) {
  const MatrixFp x = (inverse_laurent(a) * b).eval();
  return min_entry_valuation(x).value() >= 0;
}

/// Scales b by the power of pi making it the largest multiple contained in a.
MatrixFp fit_inside(const MatrixFp& a, const MatrixFp& b, const ModP& ring) {
  const MatrixFp x = (inverse_laurent(a) * b).eval();
  const int k = min_entry_valuation(x).value();
  return (b * LaurentFp::monomial(ring, Var::t, 1, k)).eval();
}

}  // namespace

bool is_chamber(const VertexClass& v0, const VertexClass& v1, const VertexClass& v2) {
  if (v0 == v1 || v1 == v2 || v0 == v2) return false;
  if (!adjacent(v0, v1) || !adjacent(v1, v2) || !adjacent(v0, v2)) return false;
  const ModP ring(v0.prime());
  const std::array<MatrixFp, 3> ms{v0.matrix(), v1.matrix(), v2.matrix()};
  const std::array<std::array<int, 3>, 6> orders{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const LaurentFp pi = uniformizer(ring);
  for (const auto& o : orders) {
    const MatrixFp& l0 = ms[static_cast<std::size_t>(o[0])];
    const MatrixFp l1 = fit_inside(l0, ms[static_cast<std::size_t>(o[1])], ring);
    const MatrixFp l2 = fit_inside(l1, ms[static_cast<std::size_t>(o[2])], ring);
    const MatrixFp pl0 = (l0 * pi).eval();
    if (contains(l2, pl0) && contains(l1, l2) && contains(l0, l1)) return true;
  }
  return false;
}

}  // namespace burau
