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

// Chat-completion backends: one real HTTP client and three simulated ones
// (oracle, digit perturber, replay) so the whole harness can run and be
// tested without model access.

#ifndef MATHPROBE_BACKENDS_HPP_
#define MATHPROBE_BACKENDS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mathprobe/contexts.hpp"

namespace mathprobe {

// Consumed only by the simulated backends; never serialized into the HTTP
// body.
struct RequestMeta {
  std::string problem_id;
  std::string setting_id;
  long long ground_truth = 0;
};

struct ChatRequest {
  std::string model;
  std::vector<Message> messages;
  double temperature = 1.0;
  double top_p = 0.2;
  RequestMeta meta;
};

struct ChatResponse {
  std::string content;
  long long latency_ms = 0;
  std::string backend_id;
  std::optional<long long> prompt_tokens;
  std::optional<long long> completion_tokens;
};

// send() must be safe to call from up to K threads concurrently. The
// simulated backends derive per-question randomness from (seed, problem id),
// so scheduling cannot change their outputs.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual ChatResponse send(const ChatRequest& request) = 0;
  virtual std::string id() const = 0;
};

// The exact JSON body POSTed to {base_url}/chat/completions. Exposed so
// tests can validate the schema without a wire tap.
std::string chat_request_body(const ChatRequest& request);

// Stable fingerprint of the outbound body (model, messages, sampling
// parameters; metadata excluded). Replay uses it to detect drift between the
// recorded run and the re-rendered prompts.
std::uint64_t request_hash(const ChatRequest& request);

struct HttpBackendConfig {
  std::string base_url;  // e.g. "https://api.openai.com/v1"
  // The key is read from this environment variable at construction and is
  // never written to disk.
  std::string api_key_env = "OPENAI_API_KEY";
  int max_retries = 3;
  long long timeout_ms = 60000;
  // Retry delay is backoff_base_ms * 2^attempt plus jitter; 429 and 5xx
  // only. Tests shrink this.
  long long backoff_base_ms = 1000;
};

struct PerturbBackendConfig {
  double p = 0.0;  // probability of hallucinating one middle digit
  std::uint64_t seed = 0;
};

// Recorded responses keyed by (question id, setting id).
class ReplayStore {
 public:
  struct Entry {
    std::uint64_t request_hash = 0;
    std::string content;
  };

  void put(const std::string& question_id, const std::string& setting_id,
           Entry entry);
  const Entry* find(const std::string& question_id,
                    const std::string& setting_id) const;
  std::size_t size() const { return entries_.size(); }

  static ReplayStore load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

 private:
  std::map<std::pair<std::string, std::string>, Entry> entries_;
};

// Always answers "[FINAL ANSWER] <ground truth>".
std::unique_ptr<Backend> make_oracle_backend();

// Oracle, except that with probability p one non-leading, non-trailing digit
// of the answer is replaced by a different digit (for 1-2 digit answers the
// last digit is the one eligible). The event and the replacement are drawn
// from (seed, problem id).
std::unique_ptr<Backend> make_perturb_backend(PerturbBackendConfig config);

// Serves recorded responses; a missing key or a request-hash mismatch is an
// error, never a silent fallback.
std::unique_ptr<Backend> make_replay_backend(ReplayStore store);

// Real OpenAI-compatible endpoint. Construction fails when the API key
// environment variable is unset or empty.
std::unique_ptr<Backend> make_http_backend(HttpBackendConfig config);

}  // namespace mathprobe

#endif  // MATHPROBE_BACKENDS_HPP_
