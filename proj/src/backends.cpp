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

#include "mathprobe/backends.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#ifdef MATHPROBE_HTTPS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <nlohmann/json.hpp>

#include "mathprobe/errors.hpp"
#include "mathprobe/rng.hpp"

namespace mathprobe {

namespace {

using ordered_json = nlohmann::ordered_json;

long long now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string hash_hex(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t parse_hash_hex(const std::string& s) {
  return std::strtoull(s.c_str(), nullptr, 16);
}

}  // namespace

std::string chat_request_body(const ChatRequest& request) {
  ordered_json body;
  body["model"] = request.model;
  body["messages"] = ordered_json::array();
  for (const Message& message : request.messages) {
    body["messages"].push_back(
        {{"role", message.role}, {"content", message.content}});
  }
  body["temperature"] = request.temperature;
  body["top_p"] = request.top_p;
  return body.dump();
}

std::uint64_t request_hash(const ChatRequest& request) {
  return hash64(chat_request_body(request));
}

void ReplayStore::put(const std::string& question_id,
                      const std::string& setting_id, Entry entry) {
  entries_[{question_id, setting_id}] = std::move(entry);
}

const ReplayStore::Entry* ReplayStore::find(
    const std::string& question_id, const std::string& setting_id) const {
  auto it = entries_.find({question_id, setting_id});
  return it == entries_.end() ? nullptr : &it->second;
}

ReplayStore ReplayStore::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open replay store: " + path.string());
  }
  ReplayStore store;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ordered_json row;
    try {
      row = ordered_json::parse(line);
      Entry entry;
      entry.request_hash = parse_hash_hex(row.at("request_hash"));
      entry.content = row.at("content");
      store.put(row.at("question_id"), row.at("setting_id"),
                std::move(entry));
    } catch (const ordered_json::exception& e) {
      throw CorruptStoreError("replay store " + path.string() + " line " +
                              std::to_string(lineno) + ": " + e.what());
    }
  }
  return store;
}

void ReplayStore::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write replay store: " + path.string());
  }
  for (const auto& [key, entry] : entries_) {
    ordered_json row;
    row["question_id"] = key.first;
    row["setting_id"] = key.second;
    row["request_hash"] = hash_hex(entry.request_hash);
    row["content"] = entry.content;
    out << row.dump() << '\n';
  }
  if (!out) {
    throw IoError("short write to replay store: " + path.string());
  }
}

namespace {

class OracleBackend : public Backend {
 public:
  ChatResponse send(const ChatRequest& request) override {
    ChatResponse response;
    response.content =
        "[FINAL ANSWER] " + std::to_string(request.meta.ground_truth);
    response.backend_id = id();
    return response;
  }
  std::string id() const override { return "oracle"; }
};

class PerturbBackend : public Backend {
 public:
  explicit PerturbBackend(PerturbBackendConfig config) : config_(config) {
    if (config_.p < 0.0 || config_.p > 1.0) {
      throw ConfigError("perturb p must be in [0,1]");
    }
  }

  ChatResponse send(const ChatRequest& request) override {
    std::string answer = std::to_string(request.meta.ground_truth);
    Rng rng(derive_seed(
        config_.seed,
        {seed_domain::kPerturb, hash64(request.meta.problem_id)}));
    if (rng.chance(config_.p)) {
      std::size_t len = answer.size();
      std::size_t pos;
      if (len >= 3) {
        // Middle digits only: positions 2..len-1, 1-indexed.
        pos = 1 + static_cast<std::size_t>(
                      rng.below(static_cast<std::uint64_t>(len - 2)));
      } else {
        pos = len - 1;
      }
      int old_digit = answer[pos] - '0';
      int offset = 1 + static_cast<int>(rng.below(9));
      answer[pos] = static_cast<char>('0' + (old_digit + offset) % 10);
    }
    ChatResponse response;
    response.content = "[FINAL ANSWER] " + answer;
    response.backend_id = id();
    return response;
  }

  std::string id() const override { return "perturb"; }

 private:
  PerturbBackendConfig config_;
};

class ReplayBackend : public Backend {
 public:
  explicit ReplayBackend(ReplayStore store) : store_(std::move(store)) {}

  ChatResponse send(const ChatRequest& request) override {
    const ReplayStore::Entry* entry =
        store_.find(request.meta.problem_id, request.meta.setting_id);
    if (entry == nullptr) {
      throw ReplayMissError("no recorded response for (" +
                            request.meta.problem_id + ", " +
                            request.meta.setting_id + ")");
    }
    if (entry->request_hash != request_hash(request)) {
      throw ReplayMismatchError(
          "request differs from the recorded one for (" +
          request.meta.problem_id + ", " + request.meta.setting_id + ")");
    }
    ChatResponse response;
    response.content = entry->content;
    response.backend_id = id();
    return response;
  }

  std::string id() const override { return "replay"; }

 private:
  ReplayStore store_;
};

class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
    if (config_.base_url.empty()) {
      throw ConfigError("http backend needs a base_url");
    }
    if (config_.max_retries < 0) {
      throw ConfigError("http max_retries must be >= 0");
    }
    const char* key = std::getenv(config_.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      throw AuthError("API key environment variable " + config_.api_key_env +
                      " is unset or empty");
    }
    api_key_ = key;
    split_base_url();
  }

  ChatResponse send(const ChatRequest& request) override {
    const std::string body = chat_request_body(request);
    const std::string path = path_prefix_ + "/chat/completions";
    const httplib::Headers headers = {
        {"Authorization", "Bearer " + api_key_}};
    Rng jitter(hash64(request.meta.problem_id) ^
               static_cast<std::uint64_t>(now_ms()));

    for (int attempt = 0;; ++attempt) {
      httplib::Client client(origin_);
      client.set_connection_timeout(config_.timeout_ms / 1000,
                                    (config_.timeout_ms % 1000) * 1000);
      client.set_read_timeout(config_.timeout_ms / 1000,
                              (config_.timeout_ms % 1000) * 1000);
      client.set_write_timeout(config_.timeout_ms / 1000,
                               (config_.timeout_ms % 1000) * 1000);

      long long started = now_ms();
      httplib::Result result =
          client.Post(path, headers, body, "application/json");
      if (!result) {
        throw NetworkError("transport failure: " +
                           httplib::to_string(result.error()));
      }
      int status = result->status;
      if (status == 200) {
        return parse_success(*result, now_ms() - started);
      }
      if (status == 401 || status == 403) {
        throw AuthError("endpoint rejected credentials (status " +
                        std::to_string(status) + ")");
      }
      bool retryable = status == 429 || (status >= 500 && status < 600);
      if (!retryable) {
        throw ProtocolError("unexpected status " + std::to_string(status) +
                            ": " + result->body.substr(0, 200));
      }
      if (attempt >= config_.max_retries) {
        throw RetryExhaustedError("gave up after " +
                                  std::to_string(attempt + 1) +
                                  " attempts, last status " +
                                  std::to_string(status));
      }
      long long delay = config_.backoff_base_ms << attempt;
      delay += static_cast<long long>(jitter.below(
          static_cast<std::uint64_t>(config_.backoff_base_ms / 2 + 1)));
      std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    }
  }

  std::string id() const override { return "http:" + config_.base_url; }

 private:
  ChatResponse parse_success(const httplib::Response& http_response,
                             long long latency_ms) {
    ordered_json payload;
    try {
      payload = ordered_json::parse(http_response.body);
    } catch (const ordered_json::exception& e) {
      throw ProtocolError(std::string("malformed response body: ") + e.what());
    }
    ChatResponse response;
    try {
      response.content =
          payload.at("choices").at(0).at("message").at("content");
    } catch (const ordered_json::exception&) {
      throw ProtocolError("response missing choices[0].message.content");
    }
    if (payload.contains("usage")) {
      const auto& usage = payload["usage"];
      if (usage.contains("prompt_tokens")) {
        response.prompt_tokens = usage["prompt_tokens"].get<long long>();
      }
      if (usage.contains("completion_tokens")) {
        response.completion_tokens =
            usage["completion_tokens"].get<long long>();
      }
    }
    response.latency_ms = latency_ms;
    response.backend_id = id();
    return response;
  }

  // "https://host:port/v1" -> origin "https://host:port", prefix "/v1".
  void split_base_url() {
    std::string url = config_.base_url;
    while (!url.empty() && url.back() == '/') url.pop_back();
    std::size_t scheme = url.find("://");
    std::size_t path_start =
        scheme == std::string::npos ? url.find('/') : url.find('/', scheme + 3);
    if (path_start == std::string::npos) {
      origin_ = url;
      path_prefix_.clear();
    } else {
      origin_ = url.substr(0, path_start);
      path_prefix_ = url.substr(path_start);
    }
    if (origin_.empty()) {
      throw ConfigError("cannot parse base_url: " + config_.base_url);
    }
  }

  HttpBackendConfig config_;
  std::string api_key_;
  std::string origin_;
  std::string path_prefix_;
};

}  // namespace

std::unique_ptr<Backend> make_oracle_backend() {
  return std::make_unique<OracleBackend>();
}

std::unique_ptr<Backend> make_perturb_backend(PerturbBackendConfig config) {
  return std::make_unique<PerturbBackend>(config);
}

std::unique_ptr<Backend> make_replay_backend(ReplayStore store) {
  return std::make_unique<ReplayBackend>(std::move(store));
}

std::unique_ptr<Backend> make_http_backend(HttpBackendConfig config) {
  return std::make_unique<HttpBackend>(std::move(config));
}

}  // namespace mathprobe
