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

#include <algorithm>
#include <filesystem>
#include <set>

#include "../support.hpp"
#include "burau/cli/commands.hpp"
#include "burau/rep/homothety.hpp"
#include "burau/rep/squier.hpp"

using namespace burau;
using namespace burau::testing;

namespace {

const ModP F3(3);

const EvaluatorFp& ev3() {
  static const EvaluatorFp ev(F3);
  return ev;
}

const SpecialVertices& special() {
  static const SpecialVertices sv = find_special_vertices(ev3());
  return sv;
}

PermGroup link_image(const VertexClass& v, const std::vector<MatrixFp>& gens) {
  const Link link(v);
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(induced_link_permutation(g, link).perm);
  return PermGroup(link.size(), perms);
}

std::vector<std::set<VertexClass>> partition(const OrbitTable& t) {
  std::vector<std::set<VertexClass>> out;
  for (const auto& o : t.orbits) out.emplace_back(o.members.begin(), o.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("groupcalc") {
  TEST_CASE("permutation basics") {
    const Perm a{1, 2, 0, 3}, b{0, 1, 3, 2};
    CHECK(compose(a, inverse_perm(a)) == identity_perm(4));
    CHECK(perm_order(a) == 3);
    CHECK(perm_order(compose(a, b)) == 4);
    const PermGroup s4(4, {Perm{1, 2, 3, 0}, Perm{1, 0, 2, 3}});
    CHECK(s4.order() == 24);
    CHECK_FALSE(s4.is_abelian());
    CHECK(s4.center_order() == 1);
    CHECK_THROWS_AS(PermGroup(4, {Perm{1, 2, 3, 0}, Perm{1, 0, 2, 3}}, 10), BudgetExceeded);
  }

  TEST_CASE("Z3 x D3 recognition") {
    // Z3 on {0,1,2} times S3 = D3 on {3,4,5}.
    const PermGroup g(6, {Perm{1, 2, 0, 3, 4, 5}, Perm{0, 1, 2, 4, 5, 3}, Perm{0, 1, 2, 4, 3, 5}});
    CHECK(g.order() == 18);
    CHECK(g.center_order() == 3);
    CHECK(g.order_statistics() == z3_times_d3_order_statistics());
    CHECK(consistent_with_z3_times_d3(g));
    const PermGroup z18(18, {[] {
                          Perm p(18);
                          for (int i = 0; i < 18; ++i) p[static_cast<std::size_t>(i)] = (i + 1) % 18;
                          return p;
                        }()});
    CHECK_FALSE(consistent_with_z3_times_d3(z18));
    CHECK(is_cyclic(z18));
    CHECK_FALSE(is_cyclic(g));
  }

  TEST_CASE("stabilizer of I over small primes") {
    for (long p : {2L, 3L, 5L}) {
      const StabReport plain = stab_identity_exact(p, IdentitySearch::plain);
      const StabReport back = stab_identity_exact(p, IdentitySearch::backtrack);
      CHECK(plain.group_order == 4);
      CHECK(back.group_order == plain.group_order);
      CHECK(back.image_order == plain.image_order);
      CHECK(plain.complete);
      CHECK(audit_report(plain).empty());
    }
    CHECK_THROWS_AS(stab_identity_exact(13), Error);
  }

  TEST_CASE("exact and word-search stabilizers agree on I and M19") {
    const std::vector<std::string> gens{"x", "y", "u"};
    for (const VertexClass& v : {special().identity, special().m19}) {
      const StabReport exact = stab_exact(v);
      const StabReport words = stab_words(v, gens, ev3());
      CHECK(exact.complete);
      CHECK(exact.image_order == words.image_order);
      CHECK(exact.group_order == words.group_order);
      CHECK(audit_report(exact).empty());
      CHECK(audit_report(words).empty());
      CHECK(link_image(v, exact.generators).elements() == link_image(v, words.generators).elements());
    }
    CHECK(stab_exact(special().identity).group_order == stab_identity_exact(3).group_order);
    const StabReport m19 = stab_exact(special().m19);
    CHECK(m19.image_order == 6);
    CHECK(m19.image_order_statistics.count(6));
  }

  TEST_CASE("stabilizer generators are unitary and fix the vertex") {
    const StabReport r = stab_exact(special().seven_star);
    REQUIRE_FALSE(r.generators.empty());
    for (const auto& g : r.generators) {
      CHECK(is_unitary(g));
      CHECK(apply(g, r.vertex) == r.vertex);
    }
    CHECK(r.group_order == 54);
    CHECK(r.image_order == 18);
    CHECK(r.image_orbit_sizes == std::vector<int>{9, 9, 3, 3, 1, 1});
    CHECK(consistent_with_z3_times_d3(link_image(r.vertex, r.generators)));
  }

  TEST_CASE("u and u1 act on Link(7*) as a dihedral group of order 6") {
    const StabReport r = stab_words(special().seven_star, {"u", "u1"}, ev3());
    const PermGroup img = link_image(r.vertex, r.generators);
    CHECK(img.order() == 6);
    CHECK_FALSE(img.is_abelian());
    const StabReport full = stab_exact(special().seven_star);
    const PermGroup big = link_image(full.vertex, full.generators);
    for (const auto& e : img.elements()) CHECK(big.contains(e));
  }

  TEST_CASE("xyx pairs the tube vertices") {
    CHECK(apply(ev3().evaluate("x.y.x"), special().seven_star) == special().eleven_star);
    TubeOptions o;
    o.close_group = false;
    for (const auto& level : tube_pattern_check(ev3(), 2, o)) {
      CHECK(apply(ev3().evaluate("x.y.x"), level.vertex) == level.partner);
      CHECK(level.partner != level.vertex);
    }
  }

  TEST_CASE("orbit classification at radius 1") {
    const OrbitTable t = orbit_classify(ev3(), {"x", "y", "u"}, 1);
    REQUIRE(t.orbits.size() == 2);
    CHECK(t.orbits[0].label == "group-point");
    CHECK(t.orbits[0].size_within_radius == 19);
    CHECK(t.orbits[1].label == "n-point");
    CHECK(t.orbits[1].size_within_radius == 8);
    CHECK(t.orbits[0].stab_order == 4);
    CHECK(t.orbits[1].stab_order == 6);
    CHECK_FALSE(t.partial);
  }

  TEST_CASE("orbit partition does not depend on generator order") {
    const auto a = partition(orbit_classify(ev3(), {"x", "y", "u"}, 1));
    const auto b = partition(orbit_classify(ev3(), {"u", "y", "x"}, 1));
    CHECK(a == b);
    OrbitOptions jobs;
    jobs.jobs = 3;
    CHECK(to_json(orbit_classify(ev3(), {"y", "u", "x"}, 1, jobs), true) ==
          to_json(orbit_classify(ev3(), {"x", "y", "u"}, 1), true));
  }

  TEST_CASE("the six-cycles of u on Link(M19) are group points") {
    const OrbitTable t = orbit_classify(ev3(), {"x", "y", "u"}, 2);
    const Link link(special().m19);
    const LinkPermutation perm = induced_link_permutation(ev3().evaluate("u"), link);
    const auto group_orbit = t.orbit_of(special().identity);
    REQUIRE(group_orbit.has_value());
    int in_six_cycles = 0;
    for (const auto& cycle : perm.cycles()) {
      if (cycle.size() != 6) continue;
      for (int i : cycle) {
        ++in_six_cycles;
        CHECK(t.orbit_of(link[i].vertex) == group_orbit);
      }
    }
    CHECK(in_six_cycles == 12);
    std::set<long> orders;
    for (const auto& o : t.orbits) orders.insert(o.stab_order);
    CHECK(orders == std::set<long>{4, 6, 54});
  }

  TEST_CASE("relations") {
    const auto reports = verify_relations(ev3());
    CHECK(reports.size() == 9);
    std::set<int> families;
    for (const auto& r : reports) {
      CHECK(r.holds_mod_p);
      families.insert(r.family);
      if (r.name == "[x^2, yxy]" || r.name == "x^4" || r.name == "y^3") CHECK(r.holds_integrally == true);
    }
    CHECK(families.size() == 7);
  }

  TEST_CASE("relators that hold integrally hold mod every small prime") {
    const EvaluatorZ evz{Integers{}};
    for (const auto& rel : presentation_relators()) {
      if (!rel.word.is_braid_word()) continue;
      if (!is_homothety(evz.evaluate(rel.word))) continue;
      for (long p : {2L, 3L, 5L}) CHECK(is_homothety(EvaluatorFp(ModP(p)).evaluate(rel.word)).has_value());
    }
  }

  TEST_CASE("kernel witness") {
    const WitnessReport w = kernel_witness_check();
    CHECK(w.pass());
    CHECK(w.relation.holds_mod_p);
    CHECK(w.relation.holds_integrally == false);
    CHECK(w.relation.letters == 72);
    CHECK(kernel_witness_check(true, false).pass());
    CHECK(kernel_witness_check(false, true).pass());
  }

  TEST_CASE("tube pattern") {
    const auto levels = tube_pattern_check(ev3(), 2);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].vertex == special().seven_star);
    CHECK(levels[0].group_order == 54);
    CHECK(levels[0].image_order == 18);
    CHECK(levels[1].image_order == 54);
    CHECK(levels[1].group_order == claimed_tube_order(2));
    CHECK(claimed_tube_order(2) == 486);
  }

  TEST_CASE("JSON output is canonical") {
    const StabReport r = stab_exact(special().m19);
    const std::string text = dump(to_json(r));
    CHECK(dump(nlohmann::json::parse(text)) == text);
    const std::string t2 = dump(to_json(orbit_classify(ev3(), {"x", "y", "u"}, 1), true));
    CHECK(dump(nlohmann::json::parse(t2)) == t2);
  }

  TEST_CASE("orbit cache returns the cold result") {
    const auto dir = std::filesystem::temp_directory_path() / ("burau-cache-test-" + std::to_string(seed()));
    std::filesystem::remove_all(dir);
    cli::RunConfig config;
    config.radius = 1;
    config.cache_dir = dir.string();
    const cli::ClaimResult cold = cli::cmd_explore(config);
    const cli::ClaimResult warm = cli::cmd_explore(config);
    CHECK_FALSE(cold.cached);
    CHECK(warm.cached);
    CHECK(cli::claim_json(cold, false) == cli::claim_json(warm, false));
    CHECK(cold.text == warm.text);
    CHECK(cold.dot == warm.dot);
    config.radius = 2;
    CHECK_FALSE(cli::cmd_explore(config).cached);
    std::filesystem::remove_all(dir);
  }
}
