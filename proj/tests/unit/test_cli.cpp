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

#include "burau/cli/commands.hpp"

using namespace burau;
using namespace burau::cli;

TEST_SUITE("cli") {
  TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    c.prime = 4;
    CHECK_THROWS_AS(c.validate(), UsageError);
    c.prime = 3;
    c.radius = 0;
    CHECK_THROWS_AS(c.validate(), UsageError);
  }

  TEST_CASE("vertex specs") {
    const EvaluatorFp ev{ModP(3)};
    const VertexClass id = VertexClass::identity(ModP(3));
    CHECK(parse_vertex_spec("I", ev) == id);
    CHECK(parse_vertex_spec(" x.I ", ev) == id);
    CHECK(parse_vertex_spec("y.x.y", ev) == parse_vertex_spec("[[1,0,t],[0,t,0],[0,0,t]]", ev));
    CHECK(parse_vertex_spec("(0,1,1 | 2 / 0 / 0)", ev) == parse_vertex_spec("M19", ev));
    CHECK(parse_vertex_spec("7^(1)", ev) == parse_vertex_spec("7*", ev));
    CHECK_THROWS_AS(parse_vertex_spec("q.x", ev), UsageError);
    CHECK_THROWS_AS(parse_vertex_spec("", ev), UsageError);
  }

  TEST_CASE("claims") {
    RunConfig c;
    CHECK(cmd_stab_identity(c).status == Status::pass);
    CHECK(cmd_verify(c).status == Status::pass);
    c.prime = 4;
    CHECK_THROWS_AS(cmd_stab_identity(c), UsageError);
    c.prime = 13;
    CHECK_THROWS_AS(cmd_stab_identity(c), UsageError);
    c.prime = 2;
    CHECK_THROWS_AS(cmd_verify(c), UsageError);
    CHECK_THROWS_AS(cmd_tube(c, 1), UsageError);
    CHECK_THROWS_AS(cmd_witness(c, true, true), UsageError);
    const ClaimResult w = cmd_witness(c, true, false);
    CHECK(w.status == Status::pass);
    CHECK(w.data["checked_integrally"] == false);
  }

  TEST_CASE("link and stab commands") {
    RunConfig c;
    const ClaimResult l = cmd_link(c, "M19", std::string("u"));
    CHECK(l.status == Status::pass);
    CHECK(l.data["permutation"]["cycle_type"] == std::vector<int>{1, 1, 1, 1, 2, 2, 3, 3, 6, 6});
    CHECK_THROWS_AS(cmd_link(c, "M19", std::string("y")), UsageError);
    const ClaimResult s = cmd_stab(c, "M19", StabMethod::word_search, {"u"});
    CHECK(s.status == Status::pass);
    CHECK(s.data["group_order"] == 6);
  }

  TEST_CASE("rendering") {
    RunConfig c;
    const ClaimResult r = cmd_verify(c);
    const std::string j = render(r, Format::json);
    const auto parsed = nlohmann::json::parse(j);
    CHECK(parsed["schema"] == kSchema);
    CHECK(parsed["status"] == "pass");
    CHECK(parsed["data"].size() == 9);
    CHECK(render(r, Format::text).rfind("relations-p3: pass", 0) == 0);
    // Commands without a graph fall back to text for DOT.
    CHECK(render(r, Format::dot) == render(r, Format::text));
    CHECK(render(cmd_link(c, "I", std::nullopt), Format::dot).rfind("graph", 0) == 0);
  }

  TEST_CASE("presentation export") {
    RunConfig c;
    const ClaimResult r = cmd_presentation_export(c, "");
    CHECK(r.text.find("FreeGroup(\"x\", \"y\", \"u\")") != std::string::npos);
    CHECK(r.data["relators"].size() == 9);
  }
}
