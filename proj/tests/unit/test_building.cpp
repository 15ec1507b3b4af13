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

#include <set>

#include "../support.hpp"
#include "burau/arith/parse.hpp"
#include "burau/building/link.hpp"
#include "burau/building/vertex.hpp"
#include "burau/rep/evaluate.hpp"

using namespace burau;
using namespace burau::testing;

namespace {

const ModP F3(3);

MatrixFp M(const char* text, long p = 3) { return parse_matrix<ModP>(text, ModP(p)); }

int min_valuation(const MatrixRF& m) {
  Valuation v = Valuation::infinity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v = min(v, m(i, j).valuation());
  return v.value();
}

// Oracle for lattice-class equality, independent of canonical forms: the
// columns of A and B span homothetic lattices iff A^-1 B, scaled to be integral
// and primitive, has a unit determinant.
bool same_class(const MatrixFp& a, const MatrixFp& b) {
  const MatrixRF x = (inverse(to_ratfunc(a)) * to_ratfunc(b)).eval();
  const int k = min_valuation(x);
  const RatFunc d = det3(x);
  return d.valuation() == Valuation(3 * k);
}

// Lattice spanned by m contains pi * O^3 (entries of pi * m^-1 are integral).
bool contains_pi_o3(const MatrixFp& m, const ModP& ring) {
  const MatrixRF x = (inverse(to_ratfunc(m)) * RatFunc(pi_power(ring, 1))).eval();
  return min_valuation(x) >= 0;
}

}  // namespace

TEST_SUITE("building") {
  TEST_CASE("canonical form examples") {
    const VertexClass id = VertexClass::identity(F3);
    CHECK(canonicalize(identity(F3)) == id);
    CHECK(id.to_string() == "(0,0,0 | - / - / -)");
    const MatrixFp printed = M("[[1,0,t],[0,t,0],[0,0,t]]");
    const VertexClass v = canonicalize(printed);
    CHECK(v.to_string() == "(0,0,1 | - / 1 / 0)");
    CHECK(canonicalize((printed * LaurentFp::variable(F3)).eval()) == v);
    CHECK(same_class(v.matrix(), printed));
    CHECK(VertexClass::parse(v.to_string(), F3) == v);
    CHECK_THROWS_AS(canonicalize(M("[[1,1,0],[1,1,0],[0,0,1]]")), SingularMatrix);
    CHECK_THROWS_AS(VertexClass::parse("(0,0,1 | - / 7 / 0)", F3), ParseError);
  }

  TEST_CASE("relative position examples") {
    const VertexClass id = VertexClass::identity(F3);
    const VertexClass printed = canonicalize(M("[[1,0,t],[0,t,0],[0,0,t]]"));
    CHECK(relative_position(id, id).to_string() == "(0,0,0)");
    CHECK(relative_position(id, printed).to_string() == "(0,0,1)");
    CHECK(relative_position(printed, id).to_string() == "(0,1,1)");
    CHECK(relative_position(id, canonicalize(M("[[1,0,0],[0,t,0],[0,0,t^2]]"))).to_string() == "(0,1,2)");
  }

  TEST_CASE("action examples") {
    const EvaluatorFp ev(F3);
    const VertexClass id = VertexClass::identity(F3);
    CHECK(apply(ev.evaluate("x"), id) == id);
    const Link link(id);
    CHECK(link.index_of(apply(ev.evaluate("y"), id)).has_value());
    const VertexClass m19 = canonicalize(ev.evaluate("M19"));
    CHECK(apply(ev.evaluate("u"), m19) == m19);
    CHECK(m19.to_string() == "(0,1,1 | 2 / 0 / 0)");
  }

  TEST_CASE("chambers") {
    const VertexClass a = VertexClass::identity(F3);
    const VertexClass b = canonicalize(M("[[1,0,0],[0,1,0],[0,0,t^-1]]"));
    const VertexClass c = canonicalize(M("[[1,0,0],[0,t^-1,0],[0,0,t^-1]]"));
    CHECK(is_chamber(a, b, c));
    CHECK(is_chamber(c, a, b));
    CHECK_FALSE(is_chamber(a, a, b));
    const VertexClass far = canonicalize(M("[[1,0,0],[0,t,0],[0,0,t^2]]"));
    CHECK_FALSE(is_chamber(a, b, far));
    // Two lines of Link(I) are never in a chamber together.
    const VertexClass l1 = canonicalize(M("[[1,0,0],[0,t^-1,0],[0,0,t^-1]]"));
    const VertexClass l2 = canonicalize(M("[[t^-1,0,0],[0,1,0],[0,0,t^-1]]"));
    CHECK_FALSE(is_chamber(a, l1, l2));
  }

  TEST_CASE("link sizes and adjacency") {
    for (long p : {2L, 3L, 5L}) {
      const ModP ring(p);
      const Link link(VertexClass::identity(ring));
      CHECK(link.size() == 2 * (p * p + p + 1));
      for (int i = 0; i < link.size(); ++i) {
        CHECK(static_cast<long>(link.neighbors(i).size()) == p + 1);
        for (int j : link.neighbors(i)) CHECK(link[i].subspace.dim != link[j].subspace.dim);
      }
    }
  }

  TEST_CASE("link of I agrees with a brute-force lattice enumeration") {
    // Every lattice strictly between pi O^3 and O^3 has a canonical form with
    // exponents in {0,1}; enumerate all such forms and keep those containing pi O^3.
    for (long p : {2L, 3L}) {
      const ModP ring(p);
      std::set<VertexClass> brute;
      for (int a1 = 0; a1 <= 1; ++a1)
        for (int a2 = 0; a2 <= 1; ++a2)
          for (int a3 = 0; a3 <= 1; ++a3) {
            if (a1 == a2 && a2 == a3) continue;
            const int n21 = a2, n3 = a3;
            const int total = n21 + 2 * n3;
            long combos = 1;
            for (int i = 0; i < total; ++i) combos *= p;
            for (long code = 0; code < combos; ++code) {
              std::array<std::vector<VertexClass::Digit>, 3> d;
              long c = code;
              auto next = [&] {
                const auto x = static_cast<VertexClass::Digit>(c % p);
                c /= p;
                return x;
              };
              for (int i = 0; i < n21; ++i) d[0].push_back(next());
              for (int i = 0; i < n3; ++i) d[1].push_back(next());
              for (int i = 0; i < n3; ++i) d[2].push_back(next());
              const VertexClass v(p, {a1, a2, a3}, d);
              if (contains_pi_o3(v.matrix(), ring)) brute.insert(v);
            }
          }
      const Link link(VertexClass::identity(ring));
      std::set<VertexClass> listed;
      for (const auto& lv : link.vertices()) listed.insert(lv.vertex);
      CHECK(listed == brute);
    }
  }

  TEST_CASE("canonical form is invariant under GL3(O) column operations and homotheties") {
    auto g = rng(20);
    for (int trial = 0; trial < 500; ++trial) {
      const ModP ring(trial % 3 == 0 ? 2 : trial % 3 == 1 ? 3 : 5);
      const MatrixFp m = random_invertible(g, ring);
      const VertexClass v = canonicalize(m);
      const MatrixFp e = random_unit(g, ring);
      const LaurentFp scale =
          LaurentFp::monomial(ring, Var::t, uniform(g, 1, static_cast<int>(ring.modulus()) - 1), uniform(g, -3, 3));
      CHECK(canonicalize((m * e).eval()) == v);
      CHECK(canonicalize((m * scale).eval()) == v);
      CHECK(canonicalize(v.matrix()) == v);
      CHECK(same_class(v.matrix(), m));
    }
  }

  TEST_CASE("action is associative") {
    auto g = rng(21);
    const EvaluatorFp ev(F3);
    const std::vector<std::string> letters{"x", "y", "u"};
    for (int trial = 0; trial < 40; ++trial) {
      const MatrixFp a = ev.evaluate(random_word(g, letters, 4)), b = ev.evaluate(random_word(g, letters, 4));
      const VertexClass v = canonicalize(random_invertible(g, F3, -1, 1));
      CHECK(apply((a * b).eval(), v) == apply(a, apply(b, v)));
    }
  }

  TEST_CASE("adjacency is symmetric and preserved by the action") {
    auto g = rng(22);
    const EvaluatorFp ev(F3);
    const std::vector<std::string> letters{"x", "y", "u"};
    const Link link(VertexClass::identity(F3));
    for (int trial = 0; trial < 60; ++trial) {
      const VertexClass v = canonicalize(random_invertible(g, F3, -1, 1));
      const VertexClass w = trial % 2 ? link[uniform(g, 0, link.size() - 1)].vertex
                                      : canonicalize(random_invertible(g, F3, -1, 1));
      CHECK(adjacent(v, w) == adjacent(w, v));
      const MatrixFp a = ev.evaluate(random_word(g, letters, 4));
      const VertexClass id = VertexClass::identity(F3);
      CHECK(adjacent(id, w) == adjacent(apply(a, id), apply(a, w)));
      CHECK(adjacent(v, w) == adjacent(apply(a, v), apply(a, w)));
    }
  }

  TEST_CASE("u on the link of M19") {
    const EvaluatorFp ev(F3);
    const VertexClass m19 = canonicalize(ev.evaluate("M19"));
    const Link link(m19);
    REQUIRE(link.size() == 26);
    const MatrixFp u = ev.evaluate("u");
    const LinkPermutation perm = induced_link_permutation(u, link);
    CHECK(perm.cycle_type() == std::vector<int>{1, 1, 1, 1, 2, 2, 3, 3, 6, 6});
    CHECK(perm.cycle_type_string() == "1^4 2^2 3^2 6^2");
    CHECK(perm.type_preserving);
    CHECK(perm.order() == 6);
    CHECK(induced_link_permutation_by_action(u, link).perm == perm.perm);
    CHECK_THROWS_AS(induced_link_permutation(ev.evaluate("y"), link), NotStabilizing);
  }

  TEST_CASE("x on the link of I and the identity element") {
    const EvaluatorFp ev(F3);
    const Link link(VertexClass::identity(F3));
    const LinkPermutation px = induced_link_permutation(ev.evaluate("x"), link);
    CHECK(4 % px.order() == 0);
    CHECK(px.type_preserving);
    CHECK(induced_link_permutation(identity(F3), link).is_identity());
    auto g = rng(23);
    const Link other(canonicalize(random_invertible(g, F3, -1, 1)));
    CHECK(induced_link_permutation(identity(F3), other).is_identity());
  }

  TEST_CASE("stabilizer elements permute the link type-preservingly") {
    const EvaluatorFp ev(F3);
    const VertexClass m19 = canonicalize(ev.evaluate("M19"));
    const Link lm(m19), li(VertexClass::identity(F3));
    for (const char* w : {"u", "u^2", "u^3", "u.u.u.u.u"}) {
      const MatrixFp g = ev.evaluate(w);
      const auto p = induced_link_permutation(g, lm);
      CHECK(p.type_preserving);
      CHECK(p.perm == induced_link_permutation_by_action(g, lm).perm);
    }
    for (const char* w : {"x", "x^2", "x^3"}) {
      const MatrixFp g = ev.evaluate(w);
      CHECK(induced_link_permutation(g, li).type_preserving);
      CHECK(induced_link_permutation(g, li).perm == induced_link_permutation_by_action(g, li).perm);
    }
  }

  TEST_CASE("stabilizing unit") {
    const EvaluatorFp ev(F3);
    const VertexClass id = VertexClass::identity(F3);
    const auto a = stabilizing_unit(ev.evaluate("x"), id);
    REQUIRE(a.has_value());
    CHECK(det3(*a).valuation() == Valuation(0));
    CHECK_FALSE(stabilizing_unit(ev.evaluate("y"), id).has_value());
  }
}
