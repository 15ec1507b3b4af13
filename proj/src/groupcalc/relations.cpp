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

#include "burau/groupcalc/relations.hpp"

#include <sstream>

#include "burau/rep/homothety.hpp"

namespace burau {

namespace {

GroupWord w(const char* text) { return GroupWord::parse(text); }

}  // namespace

std::vector<Relator> presentation_relators() {
  const GroupWord x = w("x"), y = w("y"), u = w("u"), yxy = w("y.x.y"), ww = w("w");
  std::vector<Relator> out;
  out.push_back({1, "x^4", x.power(4)});
  out.push_back({1, "y^3", y.power(3)});
  out.push_back({1, "u^6", u.power(6)});
  out.push_back({2, "[x^2, yxy]", GroupWord::commutator(x.power(2), yxy)});
  out.push_back({3, "[x, w]", GroupWord::commutator(x, ww)});
  out.push_back({4, "[yxy, w]", GroupWord::commutator(yxy, ww)});
  out.push_back({5, "[xyx, u^2]", GroupWord::commutator(w("x.y.x"), u.power(2))});
  out.push_back({6, "[x^2yx, u^3]", GroupWord::commutator(w("x^2.y.x"), u.power(3))});
  out.push_back({7, "(u^2x^2yx)^2 = (x^2yxu^2)^2", w("u^2.x^2.y.x").power(2) * w("x^2.y.x.u^2").power(2).inverse()});
  return out;
}

std::vector<RelationReport> verify_relations(const EvaluatorFp& ev) {
  const EvaluatorZ evz{Integers{}};
  std::vector<RelationReport> out;
  for (const auto& r : presentation_relators()) {
    RelationReport rep;
    rep.family = r.family;
    rep.name = r.name;
    rep.relator = r.word.to_string();
    rep.letters = r.word.letter_count();
    rep.holds_mod_p = is_homothety(ev.evaluate(r.word)).has_value();
    if (r.word.is_braid_word()) rep.holds_integrally = is_homothety(evz.evaluate(r.word)).has_value();
    out.push_back(std::move(rep));
  }
  return out;
}

bool WitnessReport::pass() const {
  if (checked_mod_p && !relation.holds_mod_p) return false;
  if (checked_integrally && relation.holds_integrally.value_or(true)) return false;
  return true;
}

WitnessReport kernel_witness_check(bool mod_p, bool integral) {
  const ConstantSet& constants = ConstantSet::builtin();
  const GroupWord word = constants.word("kernel");
  WitnessReport out;
  out.checked_mod_p = mod_p;
  out.checked_integrally = integral;
  out.relation.name = "kernel";
  out.relation.relator = constants.word_text("kernel");
  out.relation.letters = word.letter_count();
  if (mod_p) out.relation.holds_mod_p = is_homothety(EvaluatorFp(ModP(3)).evaluate(word)).has_value();
  if (integral) {
    const MatrixZ m = EvaluatorZ(Integers{}).evaluate(word);
    out.relation.holds_integrally = is_homothety(m).has_value();
    BigInt biggest = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const LaurentZ& e = m(i, j);
        out.integral_degrees.emplace_back(e.is_zero() ? 0 : e.min_exp(), e.is_zero() ? 0 : e.max_exp());
        if (!e.is_zero())
          for (int k = e.min_exp(); k <= e.max_exp(); ++k) {
            BigInt c = e.coeff(k);
            if (c < 0) c = -c;
            if (c > biggest) biggest = c;
          }
      }
    out.integral_max_coefficient = biggest.str();
  }
  return out;
}

std::string presentation_text() {
  std::ostringstream os;
  os << "# isometry group presentation, p = 3; [a,b] = a^-1*b^-1*a*b, w = u^-1*x^-1*y^-1*x*y*x*y\n";
  os << "F := FreeGroup(\"x\", \"y\", \"u\");;\n";
  os << "x := F.1;; y := F.2;; u := F.3;;\n";
  os << "rels := [\n";
  const auto rels = presentation_relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    std::string text;
    const auto& letters = rels[i].word.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k) text += '*';
      text += letters[k].name();
      if (letters[k].power != 1) text += "^" + std::to_string(letters[k].power);
    }
    os << "  " << text << (i + 1 < rels.size() ? "," : "") << "  # (" << rels[i].family << ") " << rels[i].name << "\n";
  }
  os << "];;\n";
  os << "G := F / rels;;\n";
  return os.str();
}

}  // namespace burau
