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

#include <doctest.h>

// Must mirror the library's httplib configuration; diverging here would be
// an ODR violation.
#ifdef MATHPROBE_HTTPS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "mathprobe/errors.hpp"

using namespace mathprobe;
namespace fs = std::filesystem;

namespace {

ChatRequest request_for(const std::string& problem_id, long long truth) {
  ChatRequest request;
  request.model = "gpt-3.5-turbo";
  request.messages = {{"system", "sys"}, {"user", "what is " + problem_id}};
  request.meta = {problem_id, "code:easy:rt", truth};
  return request;
}

// Local endpoint standing in for the chat-completions service.
class FakeServer {
 public:
  FakeServer() {
    server_.Post("/v1/chat/completions",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   handle(req, res);
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~FakeServer() {
    server_.stop();
    thread_.join();
  }

  std::string base_url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/v1";
  }

  // Status codes to emit before the final 200, one per call.
  std::vector<int> fail_statuses;
  std::string reply_content = "[FINAL ANSWER] 7";
  bool reply_malformed = false;
  bool reply_missing_content = false;

  std::atomic<int> calls{0};
  std::string last_body;
  std::string last_auth;

 private:
  void handle(const httplib::Request& req, httplib::Response& res) {
    int call = calls++;
    last_body = req.body;
    last_auth = req.get_header_value("Authorization");
    if (call < static_cast<int>(fail_statuses.size())) {
      res.status = fail_statuses[static_cast<std::size_t>(call)];
      res.set_content("{\"error\":\"induced\"}", "application/json");
      return;
    }
    if (reply_malformed) {
      res.set_content("{not json", "application/json");
      return;
    }
    if (reply_missing_content) {
      res.set_content("{\"choices\":[{\"message\":{}}]}", "application/json");
      return;
    }
    nlohmann::json payload = {
        {"choices",
         {{{"message", {{"role", "assistant"}, {"content", reply_content}}}}}},
        {"usage", {{"prompt_tokens", 12}, {"completion_tokens", 5}}}};
    res.set_content(payload.dump(), "application/json");
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

HttpBackendConfig http_config(const FakeServer& server) {
  HttpBackendConfig config;
  config.base_url = server.base_url();
  config.api_key_env = "MATHPROBE_TEST_KEY";
  config.backoff_base_ms = 1;
  return config;
}

}  // namespace

TEST_CASE("oracle answers with the ground truth and zero latency") {
  auto backend = make_oracle_backend();
  CHECK(backend->id() == "oracle");
  ChatResponse r = backend->send(request_for("q-1", 3919));
  CHECK(r.content == "[FINAL ANSWER] 3919");
  CHECK(r.backend_id == "oracle");
  CHECK(r.latency_ms == 0);
}

TEST_CASE("perturb at p=0 is the oracle") {
  auto perturb = make_perturb_backend({0.0, 99});
  auto oracle = make_oracle_backend();
  for (int i = 0; i < 50; ++i) {
    ChatRequest req = request_for("q-" + std::to_string(i), 10000 + i * 37);
    CHECK(perturb->send(req).content == oracle->send(req).content);
  }
}

TEST_CASE("perturb at p=1 flips exactly one interior digit") {
  auto backend = make_perturb_backend({1.0, 4242});
  std::set<std::size_t> positions;
  for (int i = 0; i < 400; ++i) {
    long long truth = 10000 + i;  // five digits
    ChatRequest req = request_for("q-" + std::to_string(i), truth);
    std::string content = backend->send(req).content;
    std::string answer = content.substr(std::string("[FINAL ANSWER] ").size());
    std::string expected = std::to_string(truth);
    REQUIRE(answer.size() == expected.size());
    std::size_t diffs = 0;
    std::size_t where = 0;
    for (std::size_t j = 0; j < answer.size(); ++j) {
      if (answer[j] != expected[j]) {
        ++diffs;
        where = j;
      }
    }
    CHECK(diffs == 1);  // always wrong, and wrong in exactly one place
    CHECK(where >= 1);
    CHECK(where <= answer.size() - 2);
    positions.insert(where);
  }
  // Every interior position of a five-digit answer gets hit eventually.
  CHECK(positions == std::set<std::size_t>{1, 2, 3});
}

TEST_CASE("perturb touches the last digit of short answers") {
  auto backend = make_perturb_backend({1.0, 7});
  for (int i = 0; i < 30; ++i) {
    long long truth = 1 + i % 9;  // single digit
    ChatRequest req = request_for("s-" + std::to_string(i), truth);
    std::string content = backend->send(req).content;
    std::string answer = content.substr(std::string("[FINAL ANSWER] ").size());
    CHECK(answer.size() == 1);
    CHECK(answer != std::to_string(truth));
  }
}

TEST_CASE("perturbation depends only on the problem id") {
  // Responses must not depend on call order, or concurrency would change
  // results.
  auto a = make_perturb_backend({0.5, 1234});
  auto b = make_perturb_backend({0.5, 1234});
  std::vector<std::string> forward;
  for (int i = 0; i < 60; ++i) {
    forward.push_back(a->send(request_for("p-" + std::to_string(i), 55555))
                          .content);
  }
  for (int i = 59; i >= 0; --i) {
    CHECK(b->send(request_for("p-" + std::to_string(i), 55555)).content ==
          forward[static_cast<std::size_t>(i)]);
  }
  // A different seed reshuffles the outcomes.
  auto c = make_perturb_backend({0.5, 1235});
  bool any_diff = false;
  for (int i = 0; i < 60; ++i) {
    any_diff |= (c->send(request_for("p-" + std::to_string(i), 55555))
                     .content != forward[static_cast<std::size_t>(i)]);
  }
  CHECK(any_diff);
}

TEST_CASE("perturb flip rate tracks p") {
  auto backend = make_perturb_backend({0.3, 2026});
  int flipped = 0;
  const int kTrials = 2000;
  for (int i = 0; i < kTrials; ++i) {
    ChatRequest req = request_for("r-" + std::to_string(i), 424242);
    if (backend->send(req).content != "[FINAL ANSWER] 424242") ++flipped;
  }
  // 600 expected, sd ~20.5; four sigmas on a fixed seed.
  CHECK(flipped >= 518);
  CHECK(flipped <= 682);
}

TEST_CASE("perturb rejects probabilities outside [0,1]") {
  CHECK_THROWS_AS(make_perturb_backend({-0.1, 0}), ConfigError);
  CHECK_THROWS_AS(make_perturb_backend({1.1, 0}), ConfigError);
}

TEST_CASE("request body carries the chat-completions schema") {
  ChatRequest req = request_for("q-9", 42);
  nlohmann::json body = nlohmann::json::parse(chat_request_body(req));
  CHECK(body["model"] == "gpt-3.5-turbo");
  CHECK(body["temperature"] == 1.0);
  CHECK(body["top_p"] == 0.2);
  REQUIRE(body["messages"].size() == 2);
  CHECK(body["messages"][0]["role"] == "system");
  CHECK(body["messages"][1]["role"] == "user");
  // Bookkeeping fields must never leak into the wire format.
  CHECK_FALSE(body.contains("meta"));
  CHECK(body.size() == 4);
}

TEST_CASE("request hashes fingerprint content, not metadata") {
  ChatRequest a = request_for("q-1", 1);
  ChatRequest b = request_for("q-1", 1);
  CHECK(request_hash(a) == request_hash(b));
  b.meta.ground_truth = 2;  // metadata: not hashed
  CHECK(request_hash(a) == request_hash(b));
  b.messages[1].content += "!";
  CHECK(request_hash(a) != request_hash(b));
  ChatRequest c = request_for("q-1", 1);
  c.model = "gpt-4";
  CHECK(request_hash(a) != request_hash(c));
  ChatRequest d = request_for("q-1", 1);
  d.top_p = 0.3;
  CHECK(request_hash(a) != request_hash(d));
}

TEST_CASE("replay store round-trips through disk") {
  ReplayStore store;
  store.put("q-1", "code:easy:rt", {0xABCDEF0123456789ull, "[FINAL ANSWER] 7"});
  store.put("q-2", "code:easy:rt", {42, "answer\nwith \"quotes\""});
  CHECK(store.size() == 2);
  REQUIRE(store.find("q-1", "code:easy:rt") != nullptr);
  CHECK(store.find("q-1", "code:easy:rt")->content == "[FINAL ANSWER] 7");
  CHECK(store.find("q-3", "code:easy:rt") == nullptr);

  fs::path path = fs::temp_directory_path() / "mathprobe_replay_test.jsonl";
  store.save(path);
  ReplayStore loaded = ReplayStore::load(path);
  CHECK(loaded.size() == 2);
  REQUIRE(loaded.find("q-2", "code:easy:rt") != nullptr);
  CHECK(loaded.find("q-2", "code:easy:rt")->content ==
        "answer\nwith \"quotes\"");
  CHECK(loaded.find("q-1", "code:easy:rt")->request_hash ==
        0xABCDEF0123456789ull);
  fs::remove(path);
}

TEST_CASE("replay store rejects corrupt lines with a location") {
  fs::path path = fs::temp_directory_path() / "mathprobe_replay_corrupt.jsonl";
  {
    std::ofstream out(path);
    out << "{\"question_id\":\"q\",\"setting_id\":\"s\",\"request_hash\":"
           "\"0000000000000001\",\"content\":\"x\"}\n";
    out << "{broken\n";
  }
  CHECK_THROWS_AS(ReplayStore::load(path), CorruptStoreError);
  try {
    ReplayStore::load(path);
  } catch (const CorruptStoreError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  fs::remove(path);
}

TEST_CASE("replay serves recorded responses and flags drift") {
  ChatRequest req = request_for("q-1", 7);
  ReplayStore store;
  store.put("q-1", "code:easy:rt", {request_hash(req), "[FINAL ANSWER] 7"});
  auto backend = make_replay_backend(std::move(store));
  CHECK(backend->id() == "replay");

  ChatResponse r = backend->send(req);
  CHECK(r.content == "[FINAL ANSWER] 7");
  CHECK(r.backend_id == "replay");

  ChatRequest missing = request_for("q-2", 7);
  CHECK_THROWS_AS(backend->send(missing), ReplayMissError);

  ChatRequest drifted = req;
  drifted.messages[1].content = "a different prompt";
  CHECK_THROWS_AS(backend->send(drifted), ReplayMismatchError);
}

TEST_CASE("http backend requires its API key at construction") {
  unsetenv("MATHPROBE_TEST_KEY");
  HttpBackendConfig config;
  config.base_url = "http://127.0.0.1:1/v1";
  config.api_key_env = "MATHPROBE_TEST_KEY";
  CHECK_THROWS_AS(make_http_backend(config), AuthError);
  setenv("MATHPROBE_TEST_KEY", "", 1);
  CHECK_THROWS_AS(make_http_backend(config), AuthError);
}

TEST_CASE("http backend posts the schema and parses the reply") {
  setenv("MATHPROBE_TEST_KEY", "sk-test-123", 1);
  FakeServer server;
  auto backend = make_http_backend(http_config(server));
  CHECK(backend->id() == "http:" + server.base_url());

  ChatResponse r = backend->send(request_for("q-1", 7));
  CHECK(r.content == "[FINAL ANSWER] 7");
  CHECK(r.prompt_tokens == 12);
  CHECK(r.completion_tokens == 5);
  CHECK(r.latency_ms >= 0);
  CHECK(server.calls == 1);
  CHECK(server.last_auth == "Bearer sk-test-123");

  nlohmann::json body = nlohmann::json::parse(server.last_body);
  CHECK(body["model"] == "gpt-3.5-turbo");
  CHECK(body["temperature"] == 1.0);
  CHECK(body["top_p"] == 0.2);
  CHECK(body["messages"][0]["role"] == "system");
}

TEST_CASE("http backend retries 429 and 5xx with backoff") {
  setenv("MATHPROBE_TEST_KEY", "sk-test-123", 1);
  FakeServer server;
  server.fail_statuses = {429, 503};
  auto backend = make_http_backend(http_config(server));
  ChatResponse r = backend->send(request_for("q-1", 7));
  CHECK(r.content == "[FINAL ANSWER] 7");
  CHECK(server.calls == 3);
}

TEST_CASE("http backend gives up after max_retries") {
  setenv("MATHPROBE_TEST_KEY", "sk-test-123", 1);
  FakeServer server;
  server.fail_statuses = {500, 500, 500, 500, 500, 500};
  HttpBackendConfig config = http_config(server);
  config.max_retries = 2;
  auto backend = make_http_backend(config);
  CHECK_THROWS_AS(backend->send(request_for("q-1", 7)), RetryExhaustedError);
  CHECK(server.calls == 3);  // initial try plus two retries
}

TEST_CASE("http backend maps auth and protocol failures to typed errors") {
  setenv("MATHPROBE_TEST_KEY", "sk-test-123", 1);
  {
    FakeServer server;
    server.fail_statuses = {401};
    auto backend = make_http_backend(http_config(server));
    CHECK_THROWS_AS(backend->send(request_for("q-1", 7)), AuthError);
    CHECK(server.calls == 1);  // auth failures never retry
  }
  {
    FakeServer server;
    server.fail_statuses = {404};
    auto backend = make_http_backend(http_config(server));
    CHECK_THROWS_AS(backend->send(request_for("q-1", 7)), ProtocolError);
  }
  {
    FakeServer server;
    server.reply_malformed = true;
    auto backend = make_http_backend(http_config(server));
    CHECK_THROWS_AS(backend->send(request_for("q-1", 7)), ProtocolError);
  }
  {
    FakeServer server;
    server.reply_missing_content = true;
    auto backend = make_http_backend(http_config(server));
    CHECK_THROWS_AS(backend->send(request_for("q-1", 7)), ProtocolError);
  }
}

TEST_CASE("transport failures surface immediately as network errors") {
  setenv("MATHPROBE_TEST_KEY", "sk-test-123", 1);
  HttpBackendConfig config;
  config.base_url = "http://127.0.0.1:9/v1";  // nothing listens on discard
  config.api_key_env = "MATHPROBE_TEST_KEY";
  config.timeout_ms = 2000;
  auto backend = make_http_backend(config);
  CHECK_THROWS_AS(backend->send(request_for("q-1", 7)), NetworkError);
}

TEST_CASE("http backend rejects a blank endpoint") {
  setenv("MATHPROBE_TEST_KEY", "sk-test-123", 1);
  HttpBackendConfig config;
  config.base_url = "";
  config.api_key_env = "MATHPROBE_TEST_KEY";
  CHECK_THROWS_AS(make_http_backend(config), ConfigError);
}
