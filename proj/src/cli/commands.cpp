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

#include "burau/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "burau/arith/parse.hpp"
#include "burau/rep/homothety.hpp"

#ifndef BURAU_VERSION
#define BURAU_VERSION "dev"
#endif

namespace burau::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

long link_size(long p) { return 2 * (p * p + p + 1); }

EvaluatorFp evaluator(const RunConfig& config) { return EvaluatorFp(ModP(config.prime), config.constant_set()); }

ExactOptions exact_options(const RunConfig& config) {
  ExactOptions o;
  o.digit_bound = config.digit_bound;
  o.budget_nodes = config.budget_nodes;
  return o;
}

void require_p3(const RunConfig& config, const std::string& what) {
  if (config.prime != 3)
    throw UsageError(what + " needs --p 3 (u and h are defined only at p = 3), got p = " + std::to_string(config.prime));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::vector<std::string> s;
  for (int x : xs) s.push_back(std::to_string(x));
  return "{" + join(s, ",") + "}";
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string explore_text(const json& data) {
  std::ostringstream os;
  const json& t = data.at("table");
  os << "p = " << t.at("p") << ", radius " << t.at("radius") << ", generators " << join(t.at("generators"), ",")
     << ", " << t.at("vertices") << " vertices" << (t.at("partial").get<bool>() ? " (partial)" : "") << "\n";
  for (const auto& o : t.at("orbits")) {
    os << "  [" << o.at("id") << "] " << o.at("label").get<std::string>() << "  " << o.at("representative").get<std::string>()
       << "  dist " << o.at("distance") << "  size " << o.at("size_within_radius") << "  stab " << o.at("stab_order")
       << (o.at("stab_complete").get<bool>() ? "" : "?") << "  link image " << o.at("stab_image_order") << "\n";
  }
  for (const auto& [name, value] : data.at("checks").items()) os << "  check " << name << ": " << value.dump() << "\n";
  for (const auto& n : t.at("notes")) os << "  note: " << n.get<std::string>() << "\n";
  return os.str();
}

template <class F>
ClaimResult timed(F&& f) {
  const auto start = Clock::now();
  ClaimResult r = f();
  r.elapsed = seconds_since(start);
  return r;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::partial: return "partial";
  }
  return "fail";
}

void RunConfig::validate() const {
  if (prime < 2 || !is_prime(prime)) throw UsageError("--p must be a prime, got " + std::to_string(prime));
  if (radius < 1 || word_depth < 1 || digit_bound < 1 || budget_nodes < 1 || jobs < 1)
    throw UsageError("radius, depth, digit-bound, budget and jobs must be positive");
}

std::vector<std::string> default_generators(long p) {
  if (p == 3) return {"u", "x", "y"};
  return {"x", "y"};
}

std::string resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("BURAU_CACHE_DIR")) return env;
  return {};
}

VertexClass parse_vertex_spec(const std::string& raw, const EvaluatorFp& ev) {
  const std::string spec = trim(raw);
  const ModP& ring = ev.ring();
  try {
    if (spec.empty()) throw UsageError("empty vertex spec");
    if (spec == "I") return VertexClass::identity(ring);
    if (spec.front() == '(') return VertexClass::parse(spec, ring);
    if (spec.rfind("[[", 0) == 0) return canonicalize(parse_matrix<ModP>(spec, ring));
    if (spec == "7*" || spec == "11*") {
      const SpecialVertices sv = find_special_vertices(ev);
      return spec == "7*" ? sv.seven_star : sv.eleven_star;
    }
    std::smatch m;
    if (std::regex_match(spec, m, std::regex(R"(7\^\(?(\d+)\)?)"))) {
      const int k = std::stoi(m[1].str());
      if (k < 1) throw UsageError("tube level must be >= 1");
      TubeOptions o;
      o.close_group = false;
      return tube_pattern_check(ev, k, o).back().vertex;
    }
    std::string word = spec;
    if (word.size() > 2 && word.substr(word.size() - 2) == ".I") word.resize(word.size() - 2);
    return apply(ev.evaluate(word), VertexClass::identity(ring));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError("bad vertex spec '" + spec + "': " + e.what());
  }
}

ClaimResult cmd_stab_identity(const RunConfig& config, IdentitySearch method) {
  config.validate();
  if (config.prime > kIdentitySearchMaxPrime)
    throw UsageError("stab-identity enumerates GL_3(F_p); supported for p <= " +
                     std::to_string(kIdentitySearchMaxPrime));
  return timed([&] {
    const long p = config.prime;
    const StabReport rep = stab_identity_exact(p, method);
    static const std::map<long, long> expected{{2, 4}, {3, 4}, {5, 4}, {7, 8}, {11, 12}};
    const bool cyclic = rep.image_order_statistics.count(rep.image_order) > 0;
    const bool faithful = rep.image_order == rep.group_order;
    ClaimResult r;
    r.claim_id = "stab-identity-p" + std::to_string(p);
    r.data = to_json(rep, false);
    r.data["cyclic"] = cyclic;
    r.data["expected_order"] = expected.count(p) ? json(expected.at(p)) : json(nullptr);
    bool ok = expected.count(p) && rep.group_order == expected.at(p) && cyclic && faithful;
    std::ostringstream os;
    os << "stabilizer of [I] over F_" << p << ": " << rep.group_order << " elements modulo scalars, "
       << (cyclic ? "cyclic" : "not cyclic") << ", acting on Link(I) with image of order " << rep.image_order << "\n";
    if (p == 3) {
      const EvaluatorFp ev = evaluator(config);
      const MatrixFp x = ev.evaluate("x");
      const bool x_fixes = stabilizing_unit(x, rep.vertex).has_value();
      const OrderResult xo = order_mod_homothety(x, 64);
      const bool x_generates = x_fixes && xo.order && *xo.order == rep.group_order;
      r.data["x_generates"] = x_generates;
      os << "x fixes [I] with order " << xo.to_string() << (x_generates ? " and generates the group" : "") << "\n";
      ok = ok && x_generates;
    }
    os << rep.notes.front() << "\n";
    r.text = os.str();
    r.status = ok ? Status::pass : Status::fail;
    return r;
  });
}

ClaimResult cmd_verify(const RunConfig& config) {
  config.validate();
  require_p3(config, "verify");
  return timed([&] {
    const EvaluatorFp ev = evaluator(config);
    const auto reports = verify_relations(ev);
    ClaimResult r;
    r.claim_id = "relations-p3";
    r.data = json::array();
    bool all_mod = true;
    std::set<int> families;
    std::ostringstream os;
    for (const auto& rep : reports) {
      r.data.push_back(to_json(rep));
      all_mod = all_mod && rep.holds_mod_p;
      if (rep.holds_mod_p) families.insert(rep.family);
      os << "  (" << rep.family << ") " << rep.name << ": mod 3 " << (rep.holds_mod_p ? "holds" : "FAILS");
      if (rep.holds_integrally) os << ", integrally " << (*rep.holds_integrally ? "holds" : "fails");
      os << "\n";
    }
    os << families.size() << "/7 families hold mod 3\n";
    r.text = os.str();
    r.status = all_mod && families.size() == 7 ? Status::pass : Status::fail;
    return r;
  });
}

ClaimResult cmd_witness(const RunConfig& config, bool mod_only, bool integral_only) {
  config.validate();
  if (mod_only && integral_only) throw UsageError("--mod-only and --integral-only are exclusive");
  return timed([&] {
    const WitnessReport w = kernel_witness_check(!integral_only, !mod_only);
    ClaimResult r;
    r.claim_id = "kernel-witness";
    r.data = to_json(w);
    std::ostringstream os;
    os << "relator with " << w.relation.letters << " letters\n";
    if (w.checked_mod_p) os << "  mod 3: " << (w.relation.holds_mod_p ? "homothety" : "NOT a homothety") << "\n";
    if (w.checked_integrally) {
      os << "  integral: " << (w.relation.holds_integrally.value_or(true) ? "homothety" : "not a homothety") << "\n";
      os << "  integral entry t-degree ranges:";
      for (const auto& [lo, hi] : w.integral_degrees) os << " [" << lo << "," << hi << "]";
      os << "\n  largest integral coefficient: " << w.integral_max_coefficient << "\n";
    }
    r.text = os.str();
    r.status = w.pass() ? Status::pass : Status::fail;
    return r;
  });
}

ClaimResult cmd_explore(const RunConfig& config, std::vector<std::string> generators) {
  config.validate();
  if (generators.empty()) generators = default_generators(config.prime);
  std::sort(generators.begin(), generators.end());
  const auto start = Clock::now();
  const std::string key = std::string("burau-mod-p ") + BURAU_VERSION + "|explore|p=" + std::to_string(config.prime) +
                          "|gens=" + join(generators, ",") + "|radius=" + std::to_string(config.radius) +
                          "|digit_bound=" + std::to_string(config.digit_bound) +
                          "|budget=" + std::to_string(config.budget_nodes) + "|constants=" +
                          std::to_string(fnv1a(config.constant_set().serialize()));
  std::filesystem::path cache_file;
  if (!config.cache_dir.empty()) {
    char name[40];
    std::snprintf(name, sizeof name, "orbits-%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
    cache_file = std::filesystem::path(config.cache_dir) / name;
    std::ifstream in(cache_file);
    if (in) {
      try {
        const json cached = json::parse(in);
        if (cached.at("key") == key) {
          ClaimResult r;
          const json& claim = cached.at("claim");
          r.claim_id = claim.at("claim_id");
          const std::string s = claim.at("status");
          r.status = s == "pass" ? Status::pass : s == "partial" ? Status::partial : Status::fail;
          r.data = claim.at("data");
          r.text = explore_text(r.data);
          r.dot = cached.at("dot");
          r.cached = true;
          r.elapsed = seconds_since(start);
          return r;
        }
      } catch (const json::exception&) {
        // Unreadable cache entries are recomputed and overwritten.
      }
    }
  }

  const EvaluatorFp ev = evaluator(config);
  OrbitOptions opts;
  opts.exact = exact_options(config);
  opts.jobs = config.jobs;
  const OrbitTable table = orbit_classify(ev, generators, config.radius, opts);

  const VertexClass id = VertexClass::identity(ev.ring());
  const Link link(id);
  const auto id_orbit = table.orbit_of(id);
  long classified = 0, group_points = 0;
  for (const auto& lv : link.vertices()) {
    const auto o = table.orbit_of(lv.vertex);
    classified += o.has_value();
    group_points += o && o == id_orbit;
  }
  json checks{{"link_vertices_classified", classified}, {"link_size", link_size(config.prime)},
              {"group_points_in_link", group_points}};
  bool ok = classified == link_size(config.prime);
  if (config.prime == 3) {
    checks["expected_group_points_in_link"] = 18;
    ok = ok && group_points == 18;
    if (config.radius >= 2) {
      std::set<long> orders;
      for (const auto& o : table.orbits) orders.insert(o.stab_order);
      const bool has_all = orders.count(4) && orders.count(6) && orders.count(54);
      checks["stab_orders_include_4_6_54"] = has_all;
      ok = ok && has_all;
    }
  }
  ClaimResult r;
  r.claim_id = "explore-p" + std::to_string(config.prime) + "-r" + std::to_string(config.radius);
  r.data = json{{"table", to_json(table)}, {"checks", checks}};
  r.status = table.partial ? Status::partial : ok ? Status::pass : Status::fail;
  r.text = explore_text(r.data);
  r.dot = table.to_dot();
  if (!cache_file.empty()) {
    json orbit_of = json::object();
    for (std::size_t i = 0; i < table.orbits.size(); ++i)
      for (const auto& m : table.orbits[i].members) orbit_of[m.to_string()] = i;
    std::error_code ec;
    std::filesystem::create_directories(cache_file.parent_path(), ec);
    std::ofstream out(cache_file);
    if (out) out << dump(json{{"key", key}, {"claim", claim_json(r, false)}, {"dot", r.dot}, {"orbit_of", orbit_of}});
  }
  r.elapsed = seconds_since(start);
  return r;
}

ClaimResult cmd_link(const RunConfig& config, const std::string& vertex, const std::optional<std::string>& element) {
  config.validate();
  return timed([&] {
    const EvaluatorFp ev = evaluator(config);
    const VertexClass v = parse_vertex_spec(vertex, ev);
    const Link link(v);
    ClaimResult r;
    r.claim_id = "link-count-p" + std::to_string(config.prime);
    json verts = json::array();
    bool regular = true;
    std::ostringstream os;
    os << "link of " << v.to_string() << ": " << link.size() << " vertices (expected " << link_size(config.prime) << ")\n";
    for (int i = 0; i < link.size(); ++i) {
      const auto& lv = link[i];
      const int degree = static_cast<int>(link.neighbors(i).size());
      regular = regular && degree == config.prime + 1;
      verts.push_back(json{{"index", i + 1}, {"subspace", lv.subspace.to_string()}, {"dim", lv.subspace.dim},
                           {"vertex", lv.vertex.to_string()}, {"degree", degree}});
      os << "  " << i + 1 << "  " << lv.subspace.to_string() << "  " << lv.vertex.to_string() << "  degree " << degree << "\n";
    }
    r.data = json{{"center", v.to_string()}, {"size", link.size()}, {"expected_size", link_size(config.prime)},
                  {"vertices", verts}, {"each_adjacent_to", regular ? json(config.prime + 1) : json(nullptr)}};
    bool ok = link.size() == link_size(config.prime) && regular;
    if (element) {
      const MatrixFp g = ev.evaluate(*element);
      LinkPermutation perm;
      try {
        perm = induced_link_permutation(g, link);
      } catch (const NotStabilizing& e) {
        throw UsageError(std::string(e.what()) + " (element " + *element + ")");
      }
      const LinkPermutation check = induced_link_permutation_by_action(g, link);
      perm.type_preserving = check.type_preserving;
      const bool agree = check.perm == perm.perm;
      r.data["element"] = *element;
      r.data["permutation"] = to_json(perm);
      r.data["routes_agree"] = agree;
      os << *element << " acts as " << perm.to_string() << "\n  cycle type " << perm.cycle_type_string()
         << (perm.type_preserving ? ", type-preserving" : ", NOT type-preserving") << "\n";
      ok = ok && agree && perm.type_preserving;
    }
    r.text = os.str();
    r.dot = link.to_dot();
    r.status = ok ? Status::pass : Status::fail;
    return r;
  });
}

ClaimResult cmd_stab(const RunConfig& config, const std::string& vertex, StabMethod method,
                     std::vector<std::string> generators) {
  config.validate();
  return timed([&] {
    const EvaluatorFp ev = evaluator(config);
    const VertexClass v = parse_vertex_spec(vertex, ev);
    StabReport rep;
    if (method == StabMethod::exact) {
      rep = stab_exact(v, exact_options(config));
    } else {
      if (generators.empty()) generators = default_generators(config.prime);
      WordSearchOptions o;
      o.depth = config.word_depth;
      rep = stab_words(v, generators, ev, o);
    }
    const auto problems = audit_report(rep);
    ClaimResult r;
    r.claim_id = method == StabMethod::exact ? "stab-exact" : "stab-words";
    r.data = to_json(rep);
    r.data["audit"] = problems;
    std::ostringstream os;
    os << method_name(rep.method) << " stabilizer of " << v.to_string() << "\n";
    os << "  order modulo homothety: " << rep.group_order << (rep.complete ? "" : " (lower bound)") << "\n";
    os << "  link image order: " << rep.image_order << ", orbit sizes " << join_ints(rep.image_orbit_sizes) << "\n";
    if (rep.bounds) os << "  bounds: " << rep.bounds->to_string() << "\n";
    if (!rep.generator_words.empty()) os << "  stabilizing words: " << join(rep.generator_words, " ") << "\n";
    for (const auto& n : rep.notes) os << "  note: " << n << "\n";
    for (const auto& p : problems) os << "  AUDIT: " << p << "\n";
    r.text = os.str();
    if (!problems.empty()) {
      r.status = Status::fail;
    } else if (method == StabMethod::exact && !rep.complete) {
      r.status = Status::partial;
    } else {
      r.status = Status::pass;
    }
    return r;
  });
}

ClaimResult cmd_tube(const RunConfig& config, int kmax) {
  config.validate();
  require_p3(config, "tube");
  if (kmax < 1) throw UsageError("--kmax must be >= 1");
  return timed([&] {
    const EvaluatorFp ev = evaluator(config);
    const auto levels = tube_pattern_check(ev, kmax);
    ClaimResult r;
    r.claim_id = "tube-pattern";
    r.data = json::array();
    bool ok = true;
    std::ostringstream os;
    for (const auto& l : levels) {
      r.data.push_back(to_json(l));
      ok = ok && l.image_ok && l.order_ok;
      os << "  k=" << l.k << "  " << l.vertex.to_string() << "  link image " << l.image_order << "  orbits "
         << join_ints(l.image_orbit_sizes) << "  group " << l.group_order << " (claimed " << l.claimed_order << ")"
         << (l.image_ok && l.order_ok ? "" : "  MISMATCH") << "\n";
    }
    r.text = os.str();
    r.status = ok ? Status::pass : Status::fail;
    return r;
  });
}

ClaimResult cmd_presentation_export(const RunConfig& config, const std::string& output_path) {
  config.validate();
  return timed([&] {
    const std::string text = presentation_text();
    ClaimResult r;
    r.claim_id = "presentation-export";
    json rels = json::array();
    for (const auto& rel : presentation_relators())
      rels.push_back(json{{"family", rel.family}, {"name", rel.name}, {"word", rel.word.to_string()}});
    r.data = json{{"relators", rels}, {"path", output_path}, {"format", "gap"}};
    r.status = Status::pass;
    if (!output_path.empty()) {
      std::ofstream out(output_path);
      if (!out) throw UsageError("cannot write " + output_path);
      out << text;
      r.text = "wrote " + output_path + "\n";
    } else {
      r.text = text;
    }
    return r;
  });
}

json claim_json(const ClaimResult& r, bool with_elapsed) {
  json j{{"schema", kSchema}, {"claim_id", r.claim_id}, {"status", status_name(r.status)}, {"data", r.data}};
  if (with_elapsed) j["elapsed"] = r.elapsed;
  return j;
}

std::string render(const ClaimResult& r, Format format) {
  switch (format) {
    case Format::json: return dump(claim_json(r));
    case Format::dot:
      if (!r.dot.empty()) return r.dot;
      [[fallthrough]];
    case Format::text: {
      std::ostringstream os;
      os << r.claim_id << ": " << status_name(r.status) << " (" << std::fixed;
      os.precision(2);
      os << r.elapsed << " s" << (r.cached ? ", cached" : "") << ")\n" << r.text;
      return os.str();
    }
  }
  return {};
}

}  // namespace burau::cli
