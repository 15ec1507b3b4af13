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

// burau: command-line front end, one subcommand per checkable claim.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "burau/cli/commands.hpp"

using namespace burau;
using namespace burau::cli;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPartial = 3;

/// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto strip = [](std::string s) {
      const auto f = s.find_first_not_of(" \t\r");
      if (f == std::string::npos) return std::string();
      return s.substr(f, s.find_last_not_of(" \t\r") - f + 1);
    };
    out[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
  }
  return out;
}

template <class T>
T to_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "' expects an integer, got '" + value + "'");
  }
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "dot") return Format::dot;
  throw UsageError("unknown format '" + s + "' (text, json, dot)");
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::partial: return kExitPartial;
    case Status::fail: return kExitFail;
  }
  return kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burau representation of B4 mod p acting on the Euclidean building of GL3(F_p(t))"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(BURAU_VERSION));

  RunConfig config;
  std::string format = "text", config_file, constants_file, cache_flag;
  bool json_flag = false;
  app.add_option("--p", config.prime, "prime p");
  app.add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--json", json_flag, "same as --format json");
  app.add_option("--radius", config.radius, "exploration radius from I");
  app.add_option("--depth", config.word_depth, "word length for word-search stabilizers");
  app.add_option("--digit-bound", config.digit_bound, "max pi-adic digits per coefficient in exact search");
  app.add_option("--budget", config.budget_nodes, "node budget for exact search");
  app.add_option("--jobs", config.jobs, "worker threads");
  app.add_option("--cache-dir", cache_flag, "orbit cache directory (default $BURAU_CACHE_DIR)");
  app.add_option("--constants", constants_file, "constants file replacing the built-in set");
  app.add_option("--config", config_file, "key=value file; command-line flags win");

  auto* stab_identity = app.add_subcommand("stab-identity", "stabilizer of [I] in the unitary group over F_p");
  std::string search = "auto";
  stab_identity->add_option("--search", search, "auto, plain or backtrack")
      ->check(CLI::IsMember({"auto", "plain", "backtrack"}));

  auto* stab = app.add_subcommand("stab", "stabilizer of a vertex");
  std::string stab_vertex, stab_method = "exact";
  std::vector<std::string> stab_gens;
  stab->add_option("--vertex", stab_vertex, "vertex spec")->required();
  stab->add_option("--method", stab_method, "exact or words")->check(CLI::IsMember({"exact", "words"}));
  stab->add_option("--gens", stab_gens, "generators for word search")->delimiter(',');

  auto* link = app.add_subcommand("link", "link of a vertex and induced permutations");
  std::string link_vertex;
  std::optional<std::string> link_element;
  link->add_option("--vertex", link_vertex, "vertex spec")->required();
  link->add_option("--element", link_element, "word whose permutation of the link is printed");

  auto* explore = app.add_subcommand("explore", "orbit classification outward from I");
  std::vector<std::string> explore_gens;
  explore->add_option("--gens", explore_gens, "generators (default x,y and u at p = 3)")->delimiter(',');

  app.add_subcommand("verify", "relation list at p = 3");

  auto* witness = app.add_subcommand("witness", "kernel witness word");
  bool mod_only = false, integral_only = false;
  witness->add_flag("--mod-only", mod_only, "only the mod-3 homothety check");
  witness->add_flag("--integral-only", integral_only, "only the integral non-homothety check");

  auto* tube = app.add_subcommand("tube", "stabilizer pattern along the tube 7^(k)");
  int kmax = 2;
  tube->add_option("--kmax", kmax, "deepest level");

  auto* export_cmd = app.add_subcommand("presentation-export", "write the presentation in GAP syntax");
  std::string export_path;
  export_cmd->add_option("-o,--output", export_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (!config_file.empty()) {
      for (const auto& [key, value] : read_config_file(config_file)) {
        auto given = [&](const std::string& flag) { return app.get_option(flag)->count() > 0; };
        if (key == "p" || key == "prime") {
          if (!given("--p")) config.prime = to_number<long>(key, value);
        } else if (key == "radius") {
          if (!given("--radius")) config.radius = to_number<int>(key, value);
        } else if (key == "depth" || key == "word_depth") {
          if (!given("--depth")) config.word_depth = to_number<int>(key, value);
        } else if (key == "digit_bound" || key == "digit-bound") {
          if (!given("--digit-bound")) config.digit_bound = to_number<int>(key, value);
        } else if (key == "budget" || key == "budget_nodes") {
          if (!given("--budget")) config.budget_nodes = to_number<long>(key, value);
        } else if (key == "jobs") {
          if (!given("--jobs")) config.jobs = to_number<int>(key, value);
        } else if (key == "cache_dir" || key == "cache-dir") {
          if (!given("--cache-dir")) cache_flag = value;
        } else if (key == "format") {
          if (!given("--format") && !json_flag) format = value;
        } else if (key == "constants") {
          if (!given("--constants")) constants_file = value;
        } else {
          throw UsageError("unknown config key '" + key + "'");
        }
      }
    }
    config.format = json_flag ? Format::json : parse_format(format);
    config.cache_dir = resolve_cache_dir(cache_flag);
    if (!constants_file.empty()) {
      config.constants = std::make_shared<ConstantSet>(ConstantSet::load(constants_file));
    }
    config.constant_set().validate();
    config.validate();

    ClaimResult result;
    if (stab_identity->parsed()) {
      const IdentitySearch m = search == "plain"       ? IdentitySearch::plain
                               : search == "backtrack" ? IdentitySearch::backtrack
                                                       : IdentitySearch::automatic;
      result = cmd_stab_identity(config, m);
    } else if (stab->parsed()) {
      result = cmd_stab(config, stab_vertex, stab_method == "words" ? StabMethod::word_search : StabMethod::exact,
                        stab_gens);
    } else if (link->parsed()) {
      result = cmd_link(config, link_vertex, link_element);
    } else if (explore->parsed()) {
      result = cmd_explore(config, explore_gens);
    } else if (app.got_subcommand("verify")) {
      result = cmd_verify(config);
    } else if (witness->parsed()) {
      result = cmd_witness(config, mod_only, integral_only);
    } else if (tube->parsed()) {
      result = cmd_tube(config, kmax);
    } else {
      result = cmd_presentation_export(config, export_path);
    }
    std::cout << render(result, config.format);
    if (result.status == Status::partial) std::cerr << "partial result: search budget or limits reached\n";
    return exit_code(result.status);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstantsError& e) {
    std::cerr << "invalid constants: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
