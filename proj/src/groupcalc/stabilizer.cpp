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

#include "burau/groupcalc/stabilizer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "burau/arith/ratfunc.hpp"
#include "burau/rep/homothety.hpp"
#include "burau/rep/squier.hpp"

namespace burau {

std::string method_name(StabMethod m) { return m == StabMethod::exact ? "exact" : "word-search"; }

int CoeffSearchBounds::total_digits() const {
  int n = 0;
  for (const auto& row : degree)
    for (int d : row) n += d + 1;
  return n;
}

std::string CoeffSearchBounds::to_string() const {
  std::ostringstream os;
  os << "degree=[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", " : "") << '[';
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << degree[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    os << ']';
  }
  os << "] digits=" << total_digits() << " digit_bound=" << digit_bound << " budget_nodes=" << budget_nodes
     << " nodes=" << nodes_visited << (truncated ? " truncated" : "");
  return os.str();
}

namespace {

long scalar_roots_of_one(long p) { return p == 2 ? 1 : 2; }

std::vector<Perm> distinct_link_perms(const std::vector<MatrixFp>& elements, const Link& link, bool& type_preserving) {
  std::set<Perm> perms;
  for (const auto& g : elements) {
    const auto lp = induced_link_permutation(g, link);
    type_preserving = type_preserving && lp.type_preserving;
    perms.insert(lp.perm);
  }
  return {perms.begin(), perms.end()};
}

void fill_image(StabReport& report, const std::vector<MatrixFp>& elements) {
  const Link link(report.vertex);
  bool tp = true;
  auto perms = distinct_link_perms(elements, link, tp);
  if (perms.empty()) perms.push_back(identity_perm(link.size()));
  const PermGroup image(link.size(), perms);
  report.image_order = image.order();
  report.image_orbit_sizes = image.orbit_sizes();
  report.image_order_statistics = image.order_statistics();
  report.image_type_preserving = tp;
}

/// Dense polynomial in s with coefficients mod p on a fixed exponent window.
class Window {
 public:
  Window(int lo, int hi, long p) : lo_(lo), size_(hi - lo + 1), p_(p) {}
  int lo() const { return lo_; }
  int size() const { return size_; }
  long p() const { return p_; }

 private:
  int lo_;
  int size_;
  long p_;
};

using Dense = std::vector<int>;

Dense dense_of(const LaurentFp& x, const Window& w) {
  Dense out(static_cast<std::size_t>(w.size()), 0);
  if (x.is_zero()) return out;
  for (int e = x.min_exp(); e <= x.max_exp(); ++e) {
    const int idx = e - w.lo();
    if (idx < 0 || idx >= w.size()) throw DomainError("exponent outside search window");
    out[static_cast<std::size_t>(idx)] = static_cast<int>(x.coeff(e));
  }
  return out;
}

struct Column {
  std::array<std::vector<int>, 3> digits;  // digits[i][d] = coefficient of pi^d in entry i
  std::array<Dense, 3> g_times;            // (G a)_k
};

class ExactSearch {
 public:
  ExactSearch(const VertexClass& v, const ExactOptions& options) : v_(v), ring_(v.prime()) {
    gram_ = pulled_back_form(v.matrix());
    bounds_ = coefficient_bounds(v);
    bounds_.digit_bound = options.digit_bound;
    bounds_.budget_nodes = options.budget_nodes;
    for (auto& row : bounds_.degree)
      for (int& d : row)
        if (options.digit_bound > 0 && d + 1 > options.digit_bound) {
          d = options.digit_bound - 1;
          bounds_.truncated = true;
        }
    int dmax = 0;
    for (const auto& row : bounds_.degree)
      for (int d : row) dmax = std::max(dmax, d);
    int gl = 0, gh = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (gram_(i, j).is_zero()) continue;
        gl = std::min(gl, gram_(i, j).min_exp());
        gh = std::max(gh, gram_(i, j).max_exp());
      }
    window_.emplace(gl - 2 * dmax, gh + 2 * dmax, ring_.modulus());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) gram_dense_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dense_of(gram_(i, j), *window_);
  }

  const CoeffSearchBounds& bounds() const { return bounds_; }

  std::vector<MatrixFp> run() {
    std::array<std::vector<Column>, 3> cols;
    for (int j = 0; j < 3; ++j) cols[static_cast<std::size_t>(j)] = candidates(j);
    std::vector<MatrixFp> out;
    for (const auto& c0 : cols[0])
      for (const auto& c1 : cols[1]) {
        if (!pair_ok(c0, c1, 0, 1)) continue;
        for (const auto& c2 : cols[2]) {
          if (!pair_ok(c0, c2, 0, 2) || !pair_ok(c1, c2, 1, 2)) continue;
          MatrixFp alpha = to_matrix({&c0, &c1, &c2});
          if (det3(alpha).valuation() != Valuation(0)) continue;
          out.push_back(std::move(alpha));
        }
      }
    return out;
  }

 private:
  long p() const { return ring_.modulus(); }

  /// Entry i of a column as an s-polynomial: sum_d c_d s^(-2d), or its bar sum_d c_d s^(2d).
  void add_product(Dense& acc, const Dense& g, const std::vector<int>& digits, bool barred) const {
    const int n = window_->size();
    for (std::size_t d = 0; d < digits.size(); ++d) {
      const int c = digits[d];
      if (!c) continue;
      const int shift = barred ? 2 * static_cast<int>(d) : -2 * static_cast<int>(d);
      for (int k = 0; k < n; ++k) {
        if (!g[static_cast<std::size_t>(k)]) continue;
        const int idx = k + shift;
        if (idx < 0 || idx >= n) throw DomainError("search window too small");
        acc[static_cast<std::size_t>(idx)] += c * g[static_cast<std::size_t>(k)];
      }
    }
  }

  void reduce(Dense& a) const {
    for (int& x : a) x = static_cast<int>(((x % p()) + p()) % p());
  }

  /// a* G b as a dense s-polynomial, using the cached G b.
  Dense form(const Column& a, const Column& b) const {
    Dense acc(static_cast<std::size_t>(window_->size()), 0);
    for (std::size_t k = 0; k < 3; ++k) add_product(acc, b.g_times[k], a.digits[k], true);
    reduce(acc);
    return acc;
  }

  bool pair_ok(const Column& a, const Column& b, int i, int j) const {
    return form(a, b) == gram_dense_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
           form(b, a) == gram_dense_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }

  std::vector<Column> candidates(int j) {
    std::vector<Column> out;
    std::array<int, 3> len{};
    int total = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      len[i] = bounds_.degree[i][static_cast<std::size_t>(j)] + 1;
      total += len[i];
    }
    std::vector<int> flat(static_cast<std::size_t>(total), 0);
    const int n = window_->size();
    const Dense zero_dense(static_cast<std::size_t>(n), 0);
    while (true) {
      if (bounds_.budget_nodes > 0 && bounds_.nodes_visited >= bounds_.budget_nodes) {
        bounds_.truncated = true;
        break;
      }
      ++bounds_.nodes_visited;
      Column c;
      std::size_t pos = 0;
      bool unit_column = false;
      for (std::size_t i = 0; i < 3; ++i) {
        c.digits[i].assign(flat.begin() + static_cast<long>(pos), flat.begin() + static_cast<long>(pos) + len[i]);
        if (len[i] > 0 && c.digits[i][0] != 0) unit_column = true;
        pos += static_cast<std::size_t>(len[i]);
      }
      if (unit_column) {
        for (std::size_t k = 0; k < 3; ++k) {
          Dense acc(static_cast<std::size_t>(n), 0);
          for (std::size_t l = 0; l < 3; ++l) add_product(acc, gram_dense_[k][l], c.digits[l], false);
          reduce(acc);
          c.g_times[k] = std::move(acc);
        }
        if (form(c, c) == gram_dense_[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]) out.push_back(std::move(c));
      }
      // Odometer step.
      std::size_t k = 0;
      while (k < flat.size()) {
        if (++flat[k] < p()) break;
        flat[k++] = 0;
      }
      if (k == flat.size()) break;
    }
    return out;
  }

  MatrixFp to_matrix(const std::array<const Column*, 3>& cols) const {
    MatrixFp a;
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        const auto& d = cols[static_cast<std::size_t>(j)]->digits[static_cast<std::size_t>(i)];
        std::vector<ModP::value_type> coeffs(d.rbegin(), d.rend());
        a(i, j) = coeffs.empty() ? LaurentFp(ring_, Var::t, 0, {})
                                 : LaurentFp(ring_, Var::t, -static_cast<int>(d.size()) + 1, std::move(coeffs));
      }
    return a;
  }

  VertexClass v_;
  ModP ring_;
  MatrixFp gram_;
  CoeffSearchBounds bounds_;
  std::optional<Window> window_;
  std::array<std::array<Dense, 3>, 3> gram_dense_;
};

MatrixFp constant_matrix(const ModP& ring, const std::array<int, 9>& a) {
  MatrixFp m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = LaurentFp::constant(ring, a[static_cast<std::size_t>(3 * i + j)]);
  return m;
}

}  // namespace

CoeffSearchBounds coefficient_bounds(const VertexClass& v) {
  const MatrixFp gram = pulled_back_form(v.matrix());
  const MatrixRF gram_inv = inverse(to_ratfunc(gram));
  CoeffSearchBounds out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // nu_s((alpha*)_ij) >= min_{k,l} nu_s(G_ik) + nu_s(G^-1_lj) =: -b.
      std::optional<int> b;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const Valuation a = gram(i, k).valuation();
          const Valuation c = gram_inv(l, j).valuation();
          if (a.is_infinite() || c.is_infinite()) continue;
          const int cand = -(a.value() + c.value());
          b = b ? std::max(*b, cand) : cand;
        }
      // (alpha*)_ij = bar(alpha_ji), a polynomial in pi of degree <= floor(b / 2).
      out.degree[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = b && *b >= 0 ? *b / 2 : -1;
    }
  return out;
}

StabReport stab_identity_exact(long p, IdentitySearch method) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p > kIdentitySearchMaxPrime)
    throw DomainError("stab_identity_exact enumerates GL_3(F_p) and is limited to p <= " +
                      std::to_string(kIdentitySearchMaxPrime));
  if (method == IdentitySearch::automatic) method = p <= 7 ? IdentitySearch::plain : IdentitySearch::backtrack;
  const ModP ring(p);
  const int q = static_cast<int>(p);
  // Constant A is J-unitary iff A^T N A = N with N = (subdiagonal ones) - I.
  const std::array<std::array<int, 3>, 3> n{{{-1, 0, 0}, {1, -1, 0}, {0, 1, -1}}};
  auto gram = [&](const int* a, const int* b) {  // a^T N b for columns a, b
    long s = 0;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) s += static_cast<long>(a[k]) * n[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] * b[l];
    return static_cast<int>(((s % p) + p) % p);
  };
  auto target = [&](int i, int j) { return (n[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % q + q) % q; };
  std::vector<std::array<int, 9>> found;  // row-major
  auto record = [&](const int* c0, const int* c1, const int* c2) {
    std::array<int, 9> a{};
    for (int i = 0; i < 3; ++i) {
      a[static_cast<std::size_t>(3 * i)] = c0[i];
      a[static_cast<std::size_t>(3 * i + 1)] = c1[i];
      a[static_cast<std::size_t>(3 * i + 2)] = c2[i];
    }
    found.push_back(a);
  };
  StabReport report;
  report.vertex = VertexClass::identity(ring);
  report.method = StabMethod::exact;
  long nodes = 0;
  if (method == IdentitySearch::plain) {
    std::array<int, 9> a{};
    while (true) {
      ++nodes;
      const int c0[3] = {a[0], a[3], a[6]}, c1[3] = {a[1], a[4], a[7]}, c2[3] = {a[2], a[5], a[8]};
      const int* cs[3] = {c0, c1, c2};
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i)
        for (int j = 0; j < 3 && ok; ++j) ok = gram(cs[i], cs[j]) == target(i, j);
      if (ok) record(c0, c1, c2);
      std::size_t k = 0;
      while (k < 9) {
        if (++a[k] < q) break;
        a[k++] = 0;
      }
      if (k == 9) break;
    }
    report.notes.push_back("plain enumeration of all 3x3 matrices over F_" + std::to_string(p));
  } else {
    std::vector<std::array<int, 3>> vecs;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) vecs.push_back({a, b, c});
    std::array<std::vector<std::array<int, 3>>, 3> cands;
    for (const auto& v : vecs) {
      ++nodes;
      for (int j = 0; j < 3; ++j)
        if (gram(v.data(), v.data()) == target(j, j)) cands[static_cast<std::size_t>(j)].push_back(v);
    }
    for (const auto& c0 : cands[0])
      for (const auto& c1 : cands[1]) {
        ++nodes;
        if (gram(c0.data(), c1.data()) != target(0, 1) || gram(c1.data(), c0.data()) != target(1, 0)) continue;
        for (const auto& c2 : cands[2]) {
          ++nodes;
          if (gram(c0.data(), c2.data()) != target(0, 2) || gram(c2.data(), c0.data()) != target(2, 0) ||
              gram(c1.data(), c2.data()) != target(1, 2) || gram(c2.data(), c1.data()) != target(2, 1))
            continue;
          record(c0.data(), c1.data(), c2.data());
        }
      }
    report.notes.push_back("column backtracking with Gram pruning over F_" + std::to_string(p));
  }
  std::sort(found.begin(), found.end());
  std::vector<MatrixFp> elements;
  for (const auto& a : found) {
    MatrixFp m = constant_matrix(ring, a);
    if (det3(m).is_zero()) continue;
    elements.push_back(std::move(m));
  }
  report.complete = true;
  report.group_order = static_cast<long>(elements.size()) / scalar_roots_of_one(p);
  report.generators = elements;
  CoeffSearchBounds b;
  b.nodes_visited = nodes;
  report.bounds = b;
  fill_image(report, elements);
  return report;
}

StabReport stab_exact(const VertexClass& v, const ExactOptions& options) {
  ExactSearch search(v, options);
  const std::vector<MatrixFp> alphas = search.run();
  StabReport report;
  report.vertex = v;
  report.method = StabMethod::exact;
  report.bounds = search.bounds();
  report.complete = !search.bounds().truncated;
  const MatrixFp m = v.matrix();
  const MatrixFp m_inv = inverse_laurent(m);
  std::vector<MatrixFp> elements;
  for (const auto& a : alphas) elements.push_back((m * a * m_inv).eval());
  report.group_order = static_cast<long>(elements.size()) / scalar_roots_of_one(v.prime());
  report.generators = elements;
  if (!report.complete) report.notes.push_back("search bounds truncated; the element list may be incomplete");
  fill_image(report, elements);
  return report;
}

StabReport stab_words(const VertexClass& v, const std::vector<std::string>& generators, const EvaluatorFp& ev,
                      const WordSearchOptions& options) {
  if (options.depth < 1) throw DomainError("word search depth must be >= 1");
  struct Gen {
    std::string word;
    MatrixFp m;
  };
  std::vector<Gen> gens;
  for (const auto& w : generators) {
    gens.push_back({w, ev.evaluate(w)});
    if (options.use_inverses) gens.push_back({"(" + w + ")^-1", ev.evaluate("(" + w + ")^-1")});
  }
  StabReport report;
  report.vertex = v;
  report.method = StabMethod::word_search;
  report.word_depth = options.depth;
  std::set<std::string> seen{matrix_key(normalize_mod_homothety(identity(ev.ring(), Var::t)))};
  std::vector<std::pair<std::string, MatrixFp>> frontier{{"", identity(ev.ring(), Var::t)}};
  std::set<std::string> fixing_keys;
  std::vector<MatrixFp> fixing;
  bool truncated = false;
  for (int depth = 1; depth <= options.depth && !frontier.empty(); ++depth) {
    std::vector<std::pair<std::string, MatrixFp>> next;
    for (const auto& [word, m] : frontier)
      for (const auto& g : gens) {
        MatrixFp prod = (m * g.m).eval();
        std::string key = matrix_key(normalize_mod_homothety(prod));
        if (!seen.insert(key).second) continue;
        if (static_cast<long>(seen.size()) > options.max_elements) {
          truncated = true;
          break;
        }
        std::string w = word.empty() ? g.word : word + "." + g.word;
        if (stabilizing_unit(prod, v)) {
          fixing_keys.insert(key);
          report.generator_words.push_back(w);
          fixing.push_back(prod);
        }
        next.emplace_back(std::move(w), std::move(prod));
      }
    frontier = std::move(next);
  }
  report.generators = fixing;
  report.complete = false;
  if (truncated) report.notes.push_back("element budget reached before the requested depth");
  report.notes.push_back("word search: orders are lower bounds");
  if (options.close_group && !fixing.empty()) {
    try {
      report.group_order = static_cast<long>(matrix_group_closure(fixing, options.max_group_order).size());
    } catch (const BudgetExceeded& e) {
      report.notes.push_back(std::string("group closure stopped: ") + e.what());
      report.group_order = static_cast<long>(fixing_keys.size());
    }
  } else {
    report.group_order = static_cast<long>(fixing_keys.size()) + 1;
  }
  fill_image(report, fixing);
  return report;
}

std::vector<std::string> audit_report(const StabReport& report) {
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    const MatrixFp& g = report.generators[i];
    if (!is_unitary(g)) problems.push_back("element " + std::to_string(i) + " is not J-unitary");
    if (apply(g, report.vertex) != report.vertex) problems.push_back("element " + std::to_string(i) + " moves the vertex");
  }
  return problems;
}

}  // namespace burau
