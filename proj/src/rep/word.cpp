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

#include "burau/rep/word.hpp"

#include <cctype>

#include "burau/arith/errors.hpp"

namespace burau {

namespace {

constexpr std::string_view kMacron = "\xCC\x84";        // U+0304 combining macron
constexpr std::string_view kYBarPrecomposed = "\xC8\xB3";  // U+0233
constexpr std::string_view kSigma = "\xCF\x83";          // U+03C3

class WordParser {
 public:
  explicit WordParser(std::string_view text) : s_(text) {}

  GroupWord parse() {
    skip_ws();
    if (done()) return {};
    GroupWord w = word();
    skip_ws();
    if (!done()) fail("unexpected character");
    return w;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool starts_with(std::string_view p) const { return s_.substr(pos_).substr(0, p.size()) == p; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  GroupWord word() {
    GroupWord w = item();
    skip_ws();
    while (peek() == '.') {
      ++pos_;
      skip_ws();
      w = w * item();
      skip_ws();
    }
    return w;
  }

  GroupWord item() {
    GroupWord a = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (peek() == '{') ++pos_;  // tolerate ^{-1}
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      std::size_t start = pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (peek() == '}') ++pos_;
      a = a.power(neg ? -n : n);
    }
    return a;
  }

  GroupWord atom() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      GroupWord w = word();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (starts_with(kYBarPrecomposed)) {
      pos_ += kYBarPrecomposed.size();
      return GroupWord({Letter{Symbol::y, 0, -1}});
    }
    if (starts_with(kSigma)) {
      pos_ += kSigma.size();
      const char d = peek();
      if (d < '1' || d > '3') fail("expected sigma index 1..3");
      ++pos_;
      return GroupWord({Letter{static_cast<Symbol>(d - '1'), 0, 1}});
    }
    std::size_t start = pos_;
    while (!done() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected generator name");
    std::string name(s_.substr(start, pos_ - start));
    bool inverted = false;
    if (starts_with(kMacron)) {
      pos_ += kMacron.size();
      inverted = true;
    }
    GroupWord w = named(name);
    return inverted ? w.inverse() : w;
  }

  GroupWord named(const std::string& name) {
    auto one = [](Symbol s, int index = 0, int power = 1) { return GroupWord({Letter{s, index, power}}); };
    if (name == "s1") return one(Symbol::sigma1);
    if (name == "s2") return one(Symbol::sigma2);
    if (name == "s3") return one(Symbol::sigma3);
    if (name == "x") return one(Symbol::x);
    if (name == "y") return one(Symbol::y);
    if (name == "X") return one(Symbol::x, 0, -1);
    if (name == "Y") return one(Symbol::y, 0, -1);
    if (name == "u") return one(Symbol::u);
    if (name == "h") return one(Symbol::h);
    if (name == "u1") return one(Symbol::u1);
    if (name == "b2" || name == "beta2") return one(Symbol::beta2);
    if (name == "M19") return one(Symbol::m19);
    if (name == "w") return GroupWord::parse("u^-1.x^-1.y^-1.x.y.x.y");
    for (std::string_view prefix : {std::string_view("alpha"), std::string_view("a")}) {
      if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0) {
        const std::string digits = name.substr(prefix.size());
        bool ok = !digits.empty();
        for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
        if (ok) {
          const int k = std::stoi(digits);
          if (k < 1) fail("alpha index must be >= 1");
          return one(Symbol::alpha, k);
        }
      }
    }
    fail("unknown generator '" + name + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Letter::name() const {
  switch (symbol) {
    case Symbol::sigma1: return "s1";
    case Symbol::sigma2: return "s2";
    case Symbol::sigma3: return "s3";
    case Symbol::x: return "x";
    case Symbol::y: return "y";
    case Symbol::u: return "u";
    case Symbol::h: return "h";
    case Symbol::u1: return "u1";
    case Symbol::alpha: return "a" + std::to_string(index);
    case Symbol::beta2: return "b2";
    case Symbol::m19: return "M19";
  }
  return "?";
}

GroupWord GroupWord::parse(std::string_view text) { return WordParser(text).parse(); }

int GroupWord::letter_count() const {
  int n = 0;
  for (const auto& l : letters_) n += l.power < 0 ? -l.power : l.power;
  return n;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.power = -l.power;
  return GroupWord(std::move(out));
}

GroupWord GroupWord::power(int n) const {
  if (n < 0) return inverse().power(-n);
  GroupWord out;
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<Letter> out = a.letters_;
  for (const auto& l : b.letters_) {
    // Merge adjacent powers of the same generator; keeps the stored form free of x.x^-1.
    if (!out.empty() && out.back().symbol == l.symbol && out.back().index == l.index &&
        (out.back().power > 0) == (l.power > 0)) {
      out.back().power += l.power;
    } else {
      out.push_back(l);
    }
  }
  return GroupWord(std::move(out));
}

GroupWord GroupWord::commutator(const GroupWord& a, const GroupWord& b) {
  return a.inverse() * b.inverse() * a * b;
}

bool GroupWord::is_braid_word() const {
  for (const auto& l : letters_) {
    switch (l.symbol) {
      case Symbol::sigma1:
      case Symbol::sigma2:
      case Symbol::sigma3:
      case Symbol::x:
      case Symbol::y: break;
      default: return false;
    }
  }
  return true;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '.';
    out += letters_[i].name();
    if (letters_[i].power != 1) out += "^" + std::to_string(letters_[i].power);
  }
  return out;
}

}  // namespace burau
