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

#include "burau/arith/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace burau {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + s + "'");
  }
  std::string digits() {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }
  long integer() {
    bool neg = accept('-');
    std::string d = digits();
    if (d.empty()) fail("expected integer");
    long v = std::stol(d);
    return neg ? -v : v;
  }
};

template <class Ring>
typename Ring::value_type parse_coeff(const std::string& digits, const Ring& ring) {
  if constexpr (std::is_same_v<Ring, Integers>) {
    return BigInt(digits);
  } else {
    return ring.reduce(std::stoll(digits));
  }
}

}  // namespace

template <class Ring>
Laurent<Ring> parse_laurent(std::string_view text, const Ring& ring) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  Cursor cur{s};
  Laurent<Ring> acc(ring, Var::t, 0, {});
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      negative = true;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    typename Ring::value_type coeff(1);
    std::string d = cur.digits();
    bool has_coeff = !d.empty();
    if (has_coeff) coeff = parse_coeff(d, ring);
    int exp = 0;
    Var var = Var::t;
    bool has_var = false;
    if (has_coeff) cur.accept('*');
    if (cur.peek() == 't' || cur.peek() == 's') {
      var = cur.peek() == 't' ? Var::t : Var::s;
      ++cur.pos;
      has_var = true;
      exp = 1;
      if (cur.accept('^')) exp = static_cast<int>(cur.integer());
    }
    if (!has_coeff && !has_var) cur.fail("expected term");
    auto term = Laurent<Ring>::monomial(ring, var, coeff, exp);
    acc = negative ? acc - term : acc + term;
  }
  return acc;
}

template <class Ring>
Mat3<Laurent<Ring>> parse_matrix(std::string_view text, const Ring& ring) {
  const std::string s = strip(text);
  Cursor cur{s};
  Mat3<Laurent<Ring>> m;
  if (!cur.accept('[')) cur.fail("expected '['");
  for (int i = 0; i < 3; ++i) {
    if (i > 0 && !cur.accept(',')) cur.fail("expected ','");
    if (!cur.accept('[')) cur.fail("expected '['");
    for (int j = 0; j < 3; ++j) {
      std::size_t start = cur.pos;
      while (!cur.done() && cur.peek() != ',' && cur.peek() != ']') ++cur.pos;
      m(i, j) = parse_laurent(std::string_view(s).substr(start, cur.pos - start), ring);
      if (j < 2 && !cur.accept(',')) cur.fail("expected ','");
    }
    if (!cur.accept(']')) cur.fail("expected ']'");
  }
  if (!cur.accept(']') || !cur.done()) cur.fail("expected final ']'");
  return m;
}

template Laurent<ModP> parse_laurent(std::string_view, const ModP&);
template Laurent<Integers> parse_laurent(std::string_view, const Integers&);
template Mat3<Laurent<ModP>> parse_matrix(std::string_view, const ModP&);
template Mat3<Laurent<Integers>> parse_matrix(std::string_view, const Integers&);

}  // namespace burau
