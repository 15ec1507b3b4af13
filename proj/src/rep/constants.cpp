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

#include "burau/rep/constants.hpp"

#include <fstream>
#include <sstream>

#include "burau/arith/parse.hpp"
#include "burau/rep/homothety.hpp"
#include "burau/rep/squier.hpp"

namespace burau {

namespace {

// Keep in sync with data/constants.txt (a unit test compares the two).
const char* const kBuiltin = R"CONSTANTS(# burau-mod-p constants, format v1
convention textbook
matrix u p=3 [[2+t+t^2, 2+t^2, 2+2*t+2*t^2], [2+2*t^2, 2+t+2*t^2, 2+t+t^2], [2+t, 2+t, 2+2*t]]
# h(2,1) repaired from 2*t+2*t^2+2*t^4, which makes h singular over F_3[t,1/t]
matrix h p=3 [[1+t^4, 1+t^2+t^4, 1+t+2*t^2+2*t^3], [2+2*t^2+2*t^4, 2+t^2+2*t^4, 2+2*t+t^2+t^3], [0, 0, 2*t^2]]
matrix beta2 p=5 [[4, 1+2*t+2*t^2, 3+t], [1+t, 4+2*t, 2+2*t], [1, 4+3*t+4*t^2, 2+2*t]]
# M19 is the vertex of Link(I) fixed by u; the printed basis below spans a group point instead
matrix M19 p=3 [[t, 0, 0], [2*t, 1, 0], [0, 0, 1]]
matrix M19printed p=any [[1, 0, t], [0, t, 0], [0, 0, t]]
word w u^-1.x^-1.y^-1.x.y.x.y
word kernel x̄.ȳ.x̄.y.x.ȳ.x.y.x.ȳ.x.ȳ.x̄.y.x.y.x̄.ȳ.x̄.ȳ.x̄.y.x.ȳ.x̄.ȳ.x̄.y.x.ȳ.x.y.x.ȳ.x.ȳ.x̄.y.x.y.x.ȳ.x̄.ȳ.x.y.x.ȳ.x̄.ȳ.x̄.y.x.ȳ.x.y.x.ȳ.x.ȳ.x̄.y.x.y.x.ȳ.x̄.ȳ.x.y.x.ȳ
)CONSTANTS";

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::string& ConstantSet::builtin_text() {
  static const std::string text(kBuiltin);
  return text;
}

const ConstantSet& ConstantSet::builtin() {
  static const ConstantSet set = parse(builtin_text());
  return set;
}

ConstantSet ConstantSet::parse(std::string_view text) {
  ConstantSet out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool seen_convention = false;
  std::vector<std::string> pending_comments;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw ParseError("constants line " + std::to_string(lineno) + ": " + what);
    };
    if (line[0] == '#') {
      if (out.matrices_.empty() && out.words_.empty() && !seen_convention) out.header_comments_.push_back(line);
      continue;
    }
    std::istringstream ls(line);
    std::string kind, name;
    ls >> kind >> name;
    if (kind == "convention") {
      auto c = BurauConvention::from_name(name);
      if (!c) fail("unknown convention '" + name + "'");
      out.convention_ = *c;
      seen_convention = true;
    } else if (kind == "matrix") {
      std::string prime_tag;
      ls >> prime_tag;
      if (prime_tag.rfind("p=", 0) != 0) fail("expected p=<prime|any>");
      MatrixConstant m;
      m.name = name;
      const std::string pv = prime_tag.substr(2);
      m.home_prime = pv == "any" ? 0 : std::stol(pv);
      std::string rest;
      std::getline(ls, rest);
      m.text = trim(rest);
      // Parse eagerly so malformed entries fail at load time.
      parse_matrix(m.text, m.home_prime ? ModP(m.home_prime) : ModP(2));
      out.matrices_.push_back(std::move(m));
    } else if (kind == "word") {
      std::string rest;
      std::getline(ls, rest);
      rest = trim(rest);
      GroupWord::parse(rest);
      out.words_.emplace_back(name, rest);
    } else {
      fail("unknown directive '" + kind + "'");
    }
  }
  return out;
}

ConstantSet ConstantSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstantsError("cannot open constants file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string ConstantSet::serialize() const {
  std::ostringstream os;
  for (const auto& c : header_comments_) os << c << '\n';
  os << "convention " << convention_.name() << '\n';
  for (const auto& m : matrices_)
    os << "matrix " << m.name << " p=" << (m.home_prime ? std::to_string(m.home_prime) : "any") << ' ' << m.text << '\n';
  for (const auto& [name, text] : words_) os << "word " << name << ' ' << text << '\n';
  return os.str();
}

bool ConstantSet::has_matrix(std::string_view name) const {
  for (const auto& m : matrices_)
    if (m.name == name) return true;
  return false;
}

const MatrixConstant& ConstantSet::matrix_entry(std::string_view name) const {
  for (const auto& m : matrices_)
    if (m.name == name) return m;
  throw ConstantsError("no matrix constant named '" + std::string(name) + "'");
}

MatrixFp ConstantSet::matrix(std::string_view name, const ModP& ring) const {
  const MatrixConstant& m = matrix_entry(name);
  if (m.home_prime != 0 && m.home_prime != ring.modulus())
    throw WrongPrime("constant '" + m.name + "' is defined only at p = " + std::to_string(m.home_prime) +
                     ", requested p = " + std::to_string(ring.modulus()));
  return parse_matrix(m.text, ring);
}

const std::string& ConstantSet::word_text(std::string_view name) const {
  for (const auto& [n, text] : words_)
    if (n == name) return text;
  throw ConstantsError("no word constant named '" + std::string(name) + "'");
}

std::vector<std::string> ConstantSet::validation_errors() const {
  struct Expectation {
    const char* name;
    int order;
  };
  std::vector<std::string> errors;
  for (const Expectation& e : {Expectation{"u", 6}, Expectation{"h", 3}, Expectation{"beta2", 4}}) {
    if (!has_matrix(e.name)) {
      errors.push_back(std::string("missing constant ") + e.name);
      continue;
    }
    const MatrixConstant& entry = matrix_entry(e.name);
    const MatrixFp a = matrix(e.name, ModP(entry.home_prime ? entry.home_prime : 3));
    const LaurentFp d = det3(a);
    if (!d.is_monomial()) {
      errors.push_back(std::string(e.name) + ": determinant " + d.to_string() + " is not a unit");
      continue;
    }
    if (!is_unitary(a)) errors.push_back(std::string(e.name) + ": not J-unitary");
    const OrderResult o = order_mod_homothety(a, 4 * e.order);
    if (!o.order || *o.order != e.order)
      errors.push_back(std::string(e.name) + ": order mod homothety " + o.to_string() + ", expected " +
                       std::to_string(e.order));
  }
  return errors;
}

void ConstantSet::validate() const {
  const auto errors = validation_errors();
  if (errors.empty()) return;
  std::string msg = "constants failed validation:";
  for (const auto& e : errors) msg += "\n  " + e;
  throw ConstantsError(msg);
}

}  // namespace burau
