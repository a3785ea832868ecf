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

#include "mathprobe/transcript.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>

#include <nlohmann/json.hpp>

#include "mathprobe/errors.hpp"

namespace mathprobe {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string hash_to_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return std::string(buf);
}

std::uint64_t hash_from_hex(const std::string& s) {
  if (s.size() != 16) throw CorruptStoreError("bad request_hash: " + s);
  std::uint64_t h = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else throw CorruptStoreError("bad request_hash: " + s);
    h = (h << 4) | static_cast<std::uint64_t>(d);
  }
  return h;
}

}  // namespace

std::string transcript_to_json_line(const TranscriptRecord& r) {
  ordered_json j;
  j["question_id"] = r.question_id;
  j["question_index"] = r.question_index;
  j["setting_id"] = r.setting_id;
  j["technique"] = r.technique;
  j["detail"] = r.detail;
  j["red_team"] = r.red_team;
  j["example_attached"] = r.example_attached;
  ordered_json prompt = ordered_json::array();
  for (const Message& m : r.prompt) {
    prompt.push_back({{"role", m.role}, {"content", m.content}});
  }
  j["prompt"] = std::move(prompt);
  j["ground_truth"] = r.ground_truth;
  j["request_hash"] = hash_to_hex(r.request_hash);
  j["backend_id"] = r.backend_id;
  if (r.has_response) {
    j["response"] = {{"content", r.response_content},
                     {"latency_ms", r.latency_ms}};
    ordered_json ext;
    ext["raw_len"] = r.extraction.raw_len;
    ext["marker_found"] = r.extraction.marker_found;
    if (r.extraction.value.has_value()) {
      ext["value"] = *r.extraction.value;
    } else {
      ext["value"] = nullptr;
    }
    ext["method"] = to_string(r.extraction.method);
    j["extraction"] = std::move(ext);
  } else {
    j["response"] = nullptr;
    j["extraction"] = nullptr;
  }
  if (r.score.has_value()) {
    ordered_json sc;
    sc["parse_failed"] = r.score->parse_failed;
    if (r.score->parse_failed) {
      sc["edit"] = nullptr;
      sc["rel_edit"] = nullptr;
      sc["rel_num"] = nullptr;
    } else {
      sc["edit"] = r.score->edit;
      sc["rel_edit"] = r.score->rel_edit;
      sc["rel_num"] = r.score->rel_num;
    }
    sc["correct"] = r.score->correct;
    j["score"] = std::move(sc);
  } else {
    j["score"] = nullptr;
  }
  j["error"] = r.error;
  j["ts_start"] = r.ts_start;
  j["ts_end"] = r.ts_end;
  return j.dump();
}

TranscriptRecord transcript_from_json_line(const std::string& line) {
  ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw CorruptStoreError("unparseable transcript line");
  }
  try {
    TranscriptRecord r;
    r.question_id = j.at("question_id").get<std::string>();
    r.question_index = j.at("question_index").get<int>();
    r.setting_id = j.at("setting_id").get<std::string>();
    r.technique = j.at("technique").get<std::string>();
    r.detail = j.at("detail").get<std::string>();
    r.red_team = j.at("red_team").get<bool>();
    r.example_attached = j.at("example_attached").get<bool>();
    for (const auto& m : j.at("prompt")) {
      r.prompt.push_back(Message{m.at("role").get<std::string>(),
                                 m.at("content").get<std::string>()});
    }
    r.ground_truth = j.at("ground_truth").get<long long>();
    r.request_hash = hash_from_hex(j.at("request_hash").get<std::string>());
    r.backend_id = j.at("backend_id").get<std::string>();
    if (!j.at("response").is_null()) {
      r.has_response = true;
      r.response_content = j["response"].at("content").get<std::string>();
      r.latency_ms = j["response"].at("latency_ms").get<long long>();
      const auto& ext = j.at("extraction");
      r.extraction.raw_len = ext.at("raw_len").get<std::size_t>();
      r.extraction.marker_found = ext.at("marker_found").get<bool>();
      if (!ext.at("value").is_null()) {
        r.extraction.value = ext["value"].get<long long>();
      }
      r.extraction.method = parse_extract_method(
          ext.at("method").get<std::string>());
    }
    if (!j.at("score").is_null()) {
      const auto& sc = j.at("score");
      PerItemScore s;
      s.parse_failed = sc.at("parse_failed").get<bool>();
      if (!s.parse_failed) {
        s.edit = sc.at("edit").get<int>();
        s.rel_edit = sc.at("rel_edit").get<double>();
        s.rel_num = sc.at("rel_num").get<double>();
      }
      s.correct = sc.at("correct").get<bool>();
      r.score = s;
    }
    r.error = j.at("error").get<std::string>();
    r.ts_start = j.at("ts_start").get<std::string>();
    r.ts_end = j.at("ts_end").get<std::string>();
    return r;
  } catch (const ordered_json::exception& e) {
    throw CorruptStoreError(std::string("bad transcript line: ") + e.what());
  }
}

TranscriptWriter::TranscriptWriter(const std::filesystem::path& path)
    : out_(path, std::ios::app | std::ios::binary) {
  if (!out_) throw IoError("cannot open for append: " + path.string());
}

void TranscriptWriter::append(const TranscriptRecord& record) {
  std::string line = transcript_to_json_line(record);
  std::lock_guard<std::mutex> lock(mu_);
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw IoError("transcript write failed");
}

std::vector<TranscriptRecord> read_transcripts(
    const std::filesystem::path& path, bool tolerate_truncated_tail,
    bool* dropped_tail) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::vector<TranscriptRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool pending_error = false;
  std::string pending_what;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    // A parse failure is only forgivable on the last line of the file.
    if (pending_error) {
      throw CorruptStoreError(pending_what);
    }
    try {
      records.push_back(transcript_from_json_line(line));
    } catch (const CorruptStoreError& e) {
      if (!tolerate_truncated_tail) throw;
      pending_error = true;
      pending_what = path.string() + ":" + std::to_string(line_no) + ": " +
                     e.what();
    }
  }
  if (dropped_tail) *dropped_tail = pending_error;
  return records;
}

ReplayStore build_replay_store(const std::vector<TranscriptRecord>& records) {
  ReplayStore store;
  for (const TranscriptRecord& r : records) {
    if (!r.has_response) continue;
    store.put(r.question_id, r.setting_id,
              ReplayStore::Entry{r.request_hash, r.response_content});
  }
  return store;
}

std::string now_iso8601_utc() {
  using namespace std::chrono;
  auto now = system_clock::now();
  auto ms = duration_cast<milliseconds>(now.time_since_epoch()) % 1000;
  std::time_t t = system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec, static_cast<int>(ms.count()));
  return std::string(buf);
}

}  // namespace mathprobe
