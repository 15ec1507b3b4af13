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

#include <doctest.h>

#include "../support.hpp"
#include "burau/arith/parse.hpp"

using namespace burau;
using namespace burau::testing;

namespace {

LaurentFp P(const char* s, long p) { return parse_laurent<ModP>(s, ModP(p)); }

// First k coefficients of the power series 1/(1 + a1 x + a2 x^2 + ...) by the
// recurrence b_n = -sum a_i b_{n-i}, plain integers mod p.
std::vector<int> series_inverse(const std::vector<int>& a, int k, int p) {
  std::vector<int> b(static_cast<std::size_t>(k), 0);
  b[0] = 1;
  for (int n = 1; n < k; ++n) {
    long acc = 0;
    for (int i = 1; i <= n && i < static_cast<int>(a.size()); ++i) acc += static_cast<long>(a[i]) * b[n - i];
    b[n] = static_cast<int>(((-acc) % p + p) % p);
  }
  return b;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("coefficient arithmetic reduces mod p") {
    CHECK(P("t+2*t^2", 3) + P("2*t", 3) == P("2*t^2", 3));
    CHECK((P("t", 3) + P("2*t", 3)).is_zero());
    CHECK(P("3+t", 3) == P("t", 3));
  }

  TEST_CASE("rational function normalization") {
    const ModP f3(3), f5(5);
    const RatFunc one_plus_t(P("1+t", 3));
    CHECK(RatFunc(1) / one_plus_t * one_plus_t == RatFunc(LaurentFp::constant(f3, 1)));
    const RatFunc q(P("t^2-1", 5), P("t-1", 5));
    CHECK(q.num() == P("1+t", 5));
    CHECK(q.den() == LaurentFp::constant(f5, 1));
    const RatFunc r(P("2*t", 5), P("2+4*t^2", 5));
    CHECK(r.den().leading_coeff() == 1);
  }

  TEST_CASE("valuation examples") {
    CHECK(RatFunc(P("t", 3)).valuation() == Valuation(-1));
    CHECK(RatFunc(RatFunc(1) / RatFunc(P("1+t", 3))).valuation() == Valuation(1));
    CHECK(RatFunc(P("t^2+1", 3), P("t", 3)).valuation() == Valuation(-1));
    CHECK(RatFunc(LaurentFp(ModP(3), Var::t, 0, {})).valuation().is_infinite());
  }

  TEST_CASE("involution examples") {
    CHECK(P("t+2*t^2", 3).bar() == P("t^-1+2*t^-2", 3));
    CHECK(P("2", 3).bar() == P("2", 3));
    const LaurentFp j = -P("s+s^-1", 3);
    CHECK(j.bar() == j);
  }

  TEST_CASE("pi-adic digits") {
    const ModP f3(3);
    CHECK(pi_adic_expand(RatFunc(LaurentFp::constant(f3, 1)), 3) == std::vector<ModP::value_type>{1, 0, 0});
    CHECK(pi_adic_expand(RatFunc(pi_power(f3, 2)), 2) == std::vector<ModP::value_type>{0, 0});
    // 1/(1+t) = pi/(1+pi)
    const RatFunc x = RatFunc(1) / RatFunc(P("1+t", 3));
    const auto oracle = series_inverse({1, 1}, 2, 3);
    std::vector<ModP::value_type> expect{0};
    for (int c : oracle) expect.push_back(c);
    CHECK(pi_adic_expand(x, 3) == expect);
    CHECK(expect == std::vector<ModP::value_type>{0, 1, 2});
    CHECK_THROWS_AS(pi_adic_expand(RatFunc(P("t", 3)), 2), DomainError);
  }

  TEST_CASE("pi-adic expansion matches the power-series oracle") {
    auto g = rng(1);
    for (long p : {2L, 3L, 5L, 7L}) {
      const ModP ring(p);
      for (int trial = 0; trial < 40; ++trial) {
        // x = 1 / (1 + a1 pi + a2 pi^2 + a3 pi^3)
        std::vector<int> a{1};
        for (int i = 0; i < 3; ++i) a.push_back(uniform(g, 0, static_cast<int>(p) - 1));
        const LaurentFp den = pi_adic_value(ring, {1, a[1], a[2], a[3]});
        const RatFunc x = RatFunc(1) / RatFunc(den);
        const auto oracle = series_inverse(a, 8, static_cast<int>(p));
        const auto got = pi_adic_expand(x, 8);
        REQUIRE(got.size() == oracle.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == oracle[i]);
      }
    }
  }

  TEST_CASE("pi-adic prefix leaves a residual of valuation >= k") {
    auto g = rng(2);
    const ModP ring(5);
    for (int trial = 0; trial < 200; ++trial) {
      RatFunc x = random_ratfunc(g, ring);
      if (x.is_zero()) continue;
      const int v = x.valuation().value();
      if (v < 0) x = x * RatFunc(pi_power(ring, -v));
      const int k = uniform(g, 0, 6);
      const RatFunc residual = x - RatFunc(pi_adic_value(ring, pi_adic_expand(x, k)));
      CHECK(residual.valuation() >= Valuation(k));
    }
  }

  TEST_CASE("ring axioms on random Laurent polynomials and rational functions") {
    auto g = rng(3);
    for (long p : {2L, 3L, 5L}) {
      const ModP ring(p);
      for (int trial = 0; trial < 100; ++trial) {
        const LaurentFp a = random_laurent(g, ring), b = random_laurent(g, ring), c = random_laurent(g, ring);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) CHECK((a * b) / b == a);
      }
      for (int trial = 0; trial < 50; ++trial) {
        const RatFunc a = random_ratfunc(g, ring), b = random_ratfunc(g, ring), c = random_ratfunc(g, ring);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
      }
    }
  }

  TEST_CASE("valuation laws") {
    auto g = rng(4);
    const ModP ring(3);
    for (int trial = 0; trial < 1000; ++trial) {
      const RatFunc x = random_ratfunc(g, ring), y = random_ratfunc(g, ring);
      if (x.is_zero() || y.is_zero()) continue;
      CHECK((x * y).valuation() == x.valuation() + y.valuation());
      const Valuation vs = (x + y).valuation();
      CHECK(vs >= min(x.valuation(), y.valuation()));
      if (x.valuation() != y.valuation()) CHECK(vs == min(x.valuation(), y.valuation()));
    }
  }

  TEST_CASE("involution is an involutive ring automorphism") {
    auto g = rng(5);
    const ModP ring(5);
    for (int trial = 0; trial < 200; ++trial) {
      const LaurentFp a = random_laurent(g, ring), b = random_laurent(g, ring);
      CHECK(a.bar().bar() == a);
      CHECK((a + b).bar() == a.bar() + b.bar());
      CHECK((a * b).bar() == a.bar() * b.bar());
      const RatFunc x = random_ratfunc(g, ring);
      CHECK(x.bar().bar() == x);
    }
  }

  TEST_CASE("normalized rational functions are equal iff cross products agree") {
    auto g = rng(6);
    const ModP ring(3);
    for (int trial = 0; trial < 300; ++trial) {
      const LaurentFp a = random_laurent(g, ring, 0, 2), b = random_nonzero_laurent(g, ring, 0, 2);
      const LaurentFp c = random_laurent(g, ring, 0, 2), d = random_nonzero_laurent(g, ring, 0, 2);
      const RatFunc x(a, b), y(c, d);
      CHECK((x == y) == (a * d == b * c));
      // Scaling numerator and denominator by a common factor is invisible.
      const LaurentFp k = random_nonzero_laurent(g, ring, 0, 2);
      CHECK(RatFunc(a * k, b * k) == x);
    }
  }

  TEST_CASE("s-ring conversion and evaluation at one") {
    CHECK(to_s_ring(P("t+2", 3)) == P("s^2+2", 3));
    CHECK(to_s_ring(P("t^-1", 3)) == P("s^-2", 3));
    CHECK(to_s_ring(LaurentFp(ModP(3), Var::t, 0, {})).is_zero());
    CHECK(from_s_ring(P("s^2+2", 3)) == P("t+2", 3));
    CHECK_THROWS_AS(from_s_ring(P("s", 3)), DomainError);
    CHECK(P("t^2+t+2", 3).evaluate_at_one() == 1);
    CHECK(P("t^-1+t", 5).evaluate_at_one() == 2);
    CHECK(LaurentFp(ModP(5), Var::t, 0, {}).evaluate_at_one() == 0);
  }

  TEST_CASE("text round trip and errors") {
    const LaurentFp u11 = P("2+t+t^2", 3);
    CHECK(u11.to_string() == "2+t+t^2");
    CHECK(P(u11.to_string().c_str(), 3) == u11);
    CHECK_THROWS_AS(P("2+*t", 3), ParseError);
    CHECK_THROWS_AS(P("t", 3) + P("t", 5), ModulusMismatch);
    CHECK_THROWS_AS(P("t", 3) * P("s", 3), VariableMismatch);
    CHECK_THROWS_AS(P("1+t", 3) / P("t^2+2", 3), NotDivisible);
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), DivisionByZero);
  }
}
