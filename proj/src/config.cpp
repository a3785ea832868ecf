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

#include "mathprobe/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "mathprobe/errors.hpp"

namespace mathprobe {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error(ErrorCode::kInternal, "to_chars failed");
  return std::string(buf, end);
}

double parse_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key + ": not a number: " + value);
  }
  return v;
}

long long parse_int(const std::string& key, const std::string& value) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key + ": not an integer: " + value);
  }
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key + ": not an unsigned integer: " + value);
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

void require_no_char(const std::string& key,
                     const std::vector<std::string>& values, char sep) {
  for (const std::string& v : values) {
    if (v.empty()) throw ConfigError(key + ": empty list entry");
    if (v.find(sep) != std::string::npos) {
      throw ConfigError(key + ": entry contains the list separator: " + v);
    }
  }
}

}  // namespace

const char* to_string(BackendSpec::Kind kind) {
  switch (kind) {
    case BackendSpec::Kind::kOracle: return "oracle";
    case BackendSpec::Kind::kPerturb: return "perturb";
    case BackendSpec::Kind::kReplay: return "replay";
    case BackendSpec::Kind::kHttp: return "http";
  }
  throw InvalidArgumentError("bad backend kind");
}

BackendSpec::Kind parse_backend_kind(std::string_view s) {
  if (s == "oracle") return BackendSpec::Kind::kOracle;
  if (s == "perturb") return BackendSpec::Kind::kPerturb;
  if (s == "replay") return BackendSpec::Kind::kReplay;
  if (s == "http") return BackendSpec::Kind::kHttp;
  throw ConfigError("backend: unknown kind: " + std::string(s));
}

void validate_config(const RunConfig& c) {
  if (c.n_questions < 1) throw ConfigError("n: must be at least 1");
  if (c.concurrency < 1) throw ConfigError("concurrency: must be at least 1");
  if (c.model.empty()) throw ConfigError("model: must not be empty");
  if (c.out_dir.empty()) throw ConfigError("out: must not be empty");
  if (c.temperature < 0.0 || c.temperature > 2.0) {
    throw ConfigError("temperature: out of [0, 2]");
  }
  if (c.top_p <= 0.0 || c.top_p > 1.0) throw ConfigError("top_p: out of (0, 1]");

  if (c.difficulties.empty()) throw ConfigError("difficulty: empty");
  if (c.example_flags.empty()) throw ConfigError("with_example: empty");
  if (c.ops.empty()) throw ConfigError("ops: empty");
  {
    std::set<Difficulty> seen(c.difficulties.begin(), c.difficulties.end());
    if (seen.size() != c.difficulties.size()) {
      throw ConfigError("difficulty: duplicate entries");
    }
  }
  {
    std::set<bool> seen(c.example_flags.begin(), c.example_flags.end());
    if (seen.size() != c.example_flags.size()) {
      throw ConfigError("with_example: duplicate entries");
    }
  }
  {
    std::set<ArithOp> seen(c.ops.begin(), c.ops.end());
    if (seen.size() != c.ops.size()) throw ConfigError("ops: duplicate entries");
  }
  {
    std::set<Technique> seen(c.techniques.begin(), c.techniques.end());
    if (seen.size() != c.techniques.size()) {
      throw ConfigError("techniques: duplicate entries");
    }
  }

  switch (c.backend.kind) {
    case BackendSpec::Kind::kOracle:
      break;
    case BackendSpec::Kind::kPerturb:
      if (c.backend.perturb.p < 0.0 || c.backend.perturb.p > 1.0) {
        throw ConfigError("perturb_p: out of [0, 1]");
      }
      break;
    case BackendSpec::Kind::kReplay:
      if (c.backend.replay_store.empty()) {
        throw ConfigError("replay_store: required for the replay backend");
      }
      break;
    case BackendSpec::Kind::kHttp:
      if (c.backend.http.base_url.empty()) {
        throw ConfigError("base_url: required for the http backend");
      }
      if (c.backend.http.api_key_env.empty()) {
        throw ConfigError("api_key_env: must not be empty");
      }
      if (c.backend.http.max_retries < 0) {
        throw ConfigError("max_retries: must be nonnegative");
      }
      if (c.backend.http.timeout_ms < 1) {
        throw ConfigError("timeout_ms: must be positive");
      }
      if (c.backend.http.backoff_base_ms < 0) {
        throw ConfigError("backoff_base_ms: must be nonnegative");
      }
      break;
  }

  for (ArithOp op : c.ops) {
    if (c.phrasings.for_op(op).empty()) {
      throw ConfigError(std::string(to_string(op)) + "_phrasings: empty pool");
    }
  }

  const PuzzleConfig& pz = c.puzzle;
  {
    std::set<std::string> names(pz.names.begin(), pz.names.end());
    if (names.size() != pz.names.size()) {
      throw ConfigError("names: duplicate entries");
    }
    if (pz.names.size() < 3) throw ConfigError("names: need at least 3");
  }
  if (pz.objects.empty()) throw ConfigError("objects: need at least 1");
  if (pz.value_min < 1 || pz.value_min > pz.value_max) {
    throw ConfigError("value_min/value_max: need 1 <= min <= max");
  }
  // 3 * k * value_max with k <= 3 must stay inside the rhs bound.
  if (pz.value_max > kMaxRhs / 9) {
    throw ConfigError("value_max: exceeds " + std::to_string(kMaxRhs / 9));
  }
  {
    std::set<HintKind> kinds(pz.hint_kinds.begin(), pz.hint_kinds.end());
    if (kinds.size() != pz.hint_kinds.size()) {
      throw ConfigError("hint_kinds: duplicate entries");
    }
    if (pz.hint_kinds.size() < 3) throw ConfigError("hint_kinds: need at least 3");
  }
  if (pz.max_attempts < 1) throw ConfigError("max_attempts: must be positive");

  if (c.pools.code_languages.empty()) throw ConfigError("code_languages: empty");
  if (c.pools.mathematicians.empty()) throw ConfigError("mathematicians: empty");
  if (c.pools.frames.empty()) throw ConfigError("frames: empty");

  // List entries must survive the canonical join/split round trip.
  require_no_char("names", pz.names, ',');
  require_no_char("objects", pz.objects, ',');
  require_no_char("code_languages", c.pools.code_languages, ',');
  require_no_char("mathematicians", c.pools.mathematicians, ',');
  require_no_char("frames", c.pools.frames, ',');
  require_no_char("add_phrasings", c.phrasings.add, '|');
  require_no_char("mul_phrasings", c.phrasings.mul, '|');
}

std::map<std::string, std::string> config_to_kv(const RunConfig& c) {
  std::map<std::string, std::string> kv;
  kv["experiment"] = to_string(c.experiment);
  kv["n"] = std::to_string(c.n_questions);
  kv["seed"] = std::to_string(c.master_seed);

  {
    std::vector<std::string> ts;
    for (Technique t : c.techniques) ts.push_back(to_string(t));
    kv["techniques"] = join(ts, ',');
  }
  kv["difficulty"] = c.difficulties.size() == 2
                         ? "both"
                         : to_string(c.difficulties.front());
  kv["with_example"] = c.example_flags.size() == 2
                           ? "both"
                           : (c.example_flags.front() ? "yes" : "no");
  kv["ops"] = c.ops.size() == 2 ? "both" : to_string(c.ops.front());

  kv["model"] = c.model;
  kv["temperature"] = format_double(c.temperature);
  kv["top_p"] = format_double(c.top_p);

  kv["backend"] = to_string(c.backend.kind);
  kv["perturb_p"] = format_double(c.backend.perturb.p);
  kv["perturb_seed"] = std::to_string(c.backend.perturb.seed);
  kv["replay_store"] = c.backend.replay_store;
  kv["base_url"] = c.backend.http.base_url;
  kv["api_key_env"] = c.backend.http.api_key_env;
  kv["max_retries"] = std::to_string(c.backend.http.max_retries);
  kv["timeout_ms"] = std::to_string(c.backend.http.timeout_ms);
  kv["backoff_base_ms"] = std::to_string(c.backend.http.backoff_base_ms);

  kv["concurrency"] = std::to_string(c.concurrency);
  kv["out"] = c.out_dir;

  kv["names"] = join(c.puzzle.names, ',');
  kv["objects"] = join(c.puzzle.objects, ',');
  kv["value_min"] = std::to_string(c.puzzle.value_min);
  kv["value_max"] = std::to_string(c.puzzle.value_max);
  {
    std::vector<std::string> ks;
    for (HintKind k : c.puzzle.hint_kinds) ks.push_back(to_string(k));
    kv["hint_kinds"] = join(ks, ',');
  }
  kv["max_attempts"] = std::to_string(c.puzzle.max_attempts);

  kv["code_languages"] = join(c.pools.code_languages, ',');
  kv["mathematicians"] = join(c.pools.mathematicians, ',');
  kv["frames"] = join(c.pools.frames, ',');

  kv["add_phrasings"] = join(c.phrasings.add, '|');
  kv["mul_phrasings"] = join(c.phrasings.mul, '|');
  kv["templates_dir"] = c.templates_dir;
  return kv;
}

namespace {

void apply_config_kv_impl(RunConfig& c, const std::string& key,
                          const std::string& value) {
  if (key == "experiment") {
    c.experiment = parse_experiment(value);
  } else if (key == "n") {
    c.n_questions = static_cast<int>(parse_int(key, value));
  } else if (key == "seed") {
    c.master_seed = parse_u64(key, value);
  } else if (key == "techniques") {
    c.techniques.clear();
    if (!value.empty()) {
      for (const std::string& part : split(value, ',')) {
        c.techniques.push_back(parse_technique(part));
      }
    }
  } else if (key == "difficulty") {
    if (value == "both") {
      c.difficulties = {Difficulty::kEasy, Difficulty::kHard};
    } else {
      c.difficulties = {parse_difficulty(value)};
    }
  } else if (key == "with_example") {
    if (value == "both") c.example_flags = {true, false};
    else if (value == "yes") c.example_flags = {true};
    else if (value == "no") c.example_flags = {false};
    else throw ConfigError("with_example: expected yes, no, or both");
  } else if (key == "ops") {
    if (value == "both") c.ops = {ArithOp::kAdd, ArithOp::kMul};
    else c.ops = {parse_arith_op(value)};
  } else if (key == "model") {
    c.model = value;
  } else if (key == "temperature") {
    c.temperature = parse_double(key, value);
  } else if (key == "top_p") {
    c.top_p = parse_double(key, value);
  } else if (key == "backend") {
    c.backend.kind = parse_backend_kind(value);
  } else if (key == "perturb_p") {
    c.backend.perturb.p = parse_double(key, value);
  } else if (key == "perturb_seed") {
    c.backend.perturb.seed = parse_u64(key, value);
  } else if (key == "replay_store") {
    c.backend.replay_store = value;
  } else if (key == "base_url") {
    c.backend.http.base_url = value;
  } else if (key == "api_key_env") {
    c.backend.http.api_key_env = value;
  } else if (key == "max_retries") {
    c.backend.http.max_retries = static_cast<int>(parse_int(key, value));
  } else if (key == "timeout_ms") {
    c.backend.http.timeout_ms = parse_int(key, value);
  } else if (key == "backoff_base_ms") {
    c.backend.http.backoff_base_ms = parse_int(key, value);
  } else if (key == "concurrency") {
    c.concurrency = static_cast<int>(parse_int(key, value));
  } else if (key == "out") {
    c.out_dir = value;
  } else if (key == "names") {
    c.puzzle.names = split(value, ',');
  } else if (key == "objects") {
    c.puzzle.objects = split(value, ',');
  } else if (key == "value_min") {
    c.puzzle.value_min = parse_int(key, value);
  } else if (key == "value_max") {
    c.puzzle.value_max = parse_int(key, value);
  } else if (key == "hint_kinds") {
    c.puzzle.hint_kinds.clear();
    for (const std::string& part : split(value, ',')) {
      c.puzzle.hint_kinds.push_back(parse_hint_kind(part));
    }
  } else if (key == "max_attempts") {
    c.puzzle.max_attempts = static_cast<int>(parse_int(key, value));
  } else if (key == "code_languages") {
    c.pools.code_languages = split(value, ',');
  } else if (key == "mathematicians") {
    c.pools.mathematicians = split(value, ',');
  } else if (key == "frames") {
    c.pools.frames = split(value, ',');
  } else if (key == "add_phrasings") {
    c.phrasings.add = split(value, '|');
  } else if (key == "mul_phrasings") {
    c.phrasings.mul = split(value, '|');
  } else if (key == "templates_dir") {
    c.templates_dir = value;
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

}  // namespace

void apply_config_kv(RunConfig& c, const std::string& key,
                     const std::string& value) {
  // The enum parsers throw InvalidArgumentError; a bad value here came from
  // configuration input, so resurface it as a config problem.
  try {
    apply_config_kv_impl(c, key, value);
  } catch (const InvalidArgumentError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

RunConfig config_from_kv(const std::map<std::string, std::string>& kv) {
  RunConfig c;
  // experiment first: list defaults depend on it only through validation,
  // but apply order is otherwise immaterial since keys are independent.
  for (const auto& [key, value] : kv) apply_config_kv(c, key, value);
  return c;
}

std::map<std::string, std::string> parse_kv_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::size_t eq = line.find('=', start);
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key=value");
    }
    std::string key = line.substr(start, eq - start);
    std::size_t key_end = key.find_last_not_of(" \t");
    key = key.substr(0, key_end + 1);
    std::string value = line.substr(eq + 1);
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    kv[key] = value;
  }
  return kv;
}

std::map<std::string, std::string> parse_kv_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kv_text(buf.str());
}

std::unique_ptr<Backend> make_backend(const BackendSpec& spec) {
  switch (spec.kind) {
    case BackendSpec::Kind::kOracle:
      return make_oracle_backend();
    case BackendSpec::Kind::kPerturb:
      return make_perturb_backend(spec.perturb);
    case BackendSpec::Kind::kReplay:
      return make_replay_backend(ReplayStore::load(spec.replay_store));
    case BackendSpec::Kind::kHttp:
      return make_http_backend(spec.http);
  }
  throw InvalidArgumentError("bad backend kind");
}

}  // namespace mathprobe
