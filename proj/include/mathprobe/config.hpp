// Copyright 2026 The mathprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATHPROBE_CONFIG_HPP_
#define MATHPROBE_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mathprobe/arithmetic.hpp"
#include "mathprobe/backends.hpp"
#include "mathprobe/contexts.hpp"
#include "mathprobe/puzzle.hpp"

namespace mathprobe {

struct BackendSpec {
  enum class Kind { kOracle, kPerturb, kReplay, kHttp };
  Kind kind = Kind::kOracle;
  PerturbBackendConfig perturb;
  std::string replay_store;  // path to a recorded-responses JSONL file
  HttpBackendConfig http;
};

const char* to_string(BackendSpec::Kind kind);
BackendSpec::Kind parse_backend_kind(std::string_view s);

// Everything a run depends on. The canonical key=value form of this struct
// is persisted in the run manifest; resuming checks it verbatim, so two runs
// agree on their outputs iff they agree here.
struct RunConfig {
  ExperimentKind experiment = ExperimentKind::kArith;
  int n_questions = 200;
  std::uint64_t master_seed = 1;

  // Which report rows to produce. Empty techniques means the experiment's
  // default roster.
  std::vector<Technique> techniques;
  std::vector<Difficulty> difficulties = {Difficulty::kEasy, Difficulty::kHard};
  std::vector<bool> example_flags = {true, false};
  std::vector<ArithOp> ops = {ArithOp::kAdd, ArithOp::kMul};

  std::string model = "gpt-3.5-turbo";
  double temperature = 1.0;
  double top_p = 0.2;

  BackendSpec backend;
  int concurrency = 4;
  std::string out_dir = "out";

  PhrasingPools phrasings = PhrasingPools::defaults();
  PuzzleConfig puzzle = PuzzleConfig::defaults();
  ContextPools pools = ContextPools::defaults();
  // Directory holding wrapper template files; empty uses the built-in set.
  std::string templates_dir;
};

// Throws ConfigError with the offending key's name on any invalid field.
void validate_config(const RunConfig& config);

// Canonical serialization: every key present, keys sorted, values in the
// same textual form config_from_kv accepts.
std::map<std::string, std::string> config_to_kv(const RunConfig& config);
RunConfig config_from_kv(const std::map<std::string, std::string>& kv);

// Applies one key=value assignment on top of config; unknown keys throw.
void apply_config_kv(RunConfig& config, const std::string& key,
                     const std::string& value);

// key=value lines; blank lines and #-comments skipped; no quoting.
std::map<std::string, std::string> parse_kv_file(
    const std::filesystem::path& path);
std::map<std::string, std::string> parse_kv_text(const std::string& text);

std::unique_ptr<Backend> make_backend(const BackendSpec& spec);

}  // namespace mathprobe

#endif  // MATHPROBE_CONFIG_HPP_
