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

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burau/groupcalc/serialize.hpp"

namespace burau::cli {

enum class Format { text, json, dot };
enum class Status { pass, fail, partial };
std::string status_name(Status s);

/// Bad arguments (non-prime p, wrong prime for a command, malformed vertex).
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  long prime = 3;
  int radius = 1;
  int word_depth = 2;
  int digit_bound = 8;
  long budget_nodes = 20'000'000;
  int jobs = 1;
  std::string cache_dir;  // empty: no cache
  Format format = Format::text;
  std::shared_ptr<const ConstantSet> constants;  // null: builtin

  const ConstantSet& constant_set() const { return constants ? *constants : ConstantSet::builtin(); }
  /// Throws UsageError unless the counts are positive and the prime is supported.
  void validate() const;
};

struct ClaimResult {
  std::string claim_id;
  Status status = Status::fail;
  nlohmann::json data;
  double elapsed = 0;
  std::string text;  // human-readable body
  std::string dot;   // graph output when the command has one
  bool cached = false;
};

/// Vertex spec: `I`, a canonical form `(a1,a2,a3 | ...)`, a literal matrix
/// `[[...], [...], [...]]`, `7*`, `11*`, `7^(k)`, or a word applied to I
/// (e.g. `y.x.y`, optionally ending in `.I`).
VertexClass parse_vertex_spec(const std::string& spec, const EvaluatorFp& ev);

ClaimResult cmd_stab_identity(const RunConfig& config, IdentitySearch method = IdentitySearch::automatic);
ClaimResult cmd_verify(const RunConfig& config);
ClaimResult cmd_witness(const RunConfig& config, bool mod_only, bool integral_only);
ClaimResult cmd_explore(const RunConfig& config, std::vector<std::string> generators = {});
ClaimResult cmd_link(const RunConfig& config, const std::string& vertex, const std::optional<std::string>& element);
ClaimResult cmd_stab(const RunConfig& config, const std::string& vertex, StabMethod method,
                     std::vector<std::string> generators);
ClaimResult cmd_tube(const RunConfig& config, int kmax);
ClaimResult cmd_presentation_export(const RunConfig& config, const std::string& output_path);

/// {"claim_id", "data", "schema", "status"} plus "elapsed" when requested.
nlohmann::json claim_json(const ClaimResult& r, bool with_elapsed = true);
std::string render(const ClaimResult& r, Format format);

/// Default generators: x, y and u at p = 3, x and y elsewhere.
std::vector<std::string> default_generators(long p);

/// Cache directory from the flag, else $BURAU_CACHE_DIR, else empty.
std::string resolve_cache_dir(const std::string& flag);

}  // namespace burau::cli
