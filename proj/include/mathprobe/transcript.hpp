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

#ifndef MATHPROBE_TRANSCRIPT_HPP_
#define MATHPROBE_TRANSCRIPT_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mathprobe/backends.hpp"
#include "mathprobe/extract.hpp"
#include "mathprobe/metrics.hpp"

namespace mathprobe {

// One (question, setting) unit: the prompt that was sent, what came back,
// and how it scored. Exactly one record exists per pair in a finished run.
// error is non-empty for transport failures, in which case the response,
// extraction, and score are absent.
struct TranscriptRecord {
  std::string question_id;
  int question_index = 0;  // position in the run's question set
  std::string setting_id;
  std::string technique;
  std::string detail;  // chosen pool entry, empty for detail-free wraps
  bool red_team = false;
  bool example_attached = false;
  std::vector<Message> prompt;
  long long ground_truth = 0;
  std::uint64_t request_hash = 0;
  std::string backend_id;
  bool has_response = false;
  std::string response_content;
  long long latency_ms = 0;
  Extraction extraction;  // meaningful only when has_response
  std::optional<PerItemScore> score;
  std::string error;
  std::string ts_start;
  std::string ts_end;
};

std::string transcript_to_json_line(const TranscriptRecord& record);
TranscriptRecord transcript_from_json_line(const std::string& line);

// Append-only JSONL writer; append() is serialized internally and flushes
// per record so a crash loses at most the line being written.
class TranscriptWriter {
 public:
  explicit TranscriptWriter(const std::filesystem::path& path);
  void append(const TranscriptRecord& record);

 private:
  std::ofstream out_;
  std::mutex mu_;
};

// Reads a transcript file. With tolerate_truncated_tail, a final line that
// does not parse is dropped (interrupted write during a crash); anywhere
// else a bad line is corruption and throws. dropped_tail, when given,
// reports whether such a line was dropped so the caller can rewrite the
// file before appending after it.
std::vector<TranscriptRecord> read_transcripts(
    const std::filesystem::path& path, bool tolerate_truncated_tail,
    bool* dropped_tail = nullptr);

// Distills transcripts into a replay store; error records (no response) are
// skipped.
ReplayStore build_replay_store(const std::vector<TranscriptRecord>& records);

// "2026-08-17T12:34:56.789Z"
std::string now_iso8601_utc();

}  // namespace mathprobe

#endif  // MATHPROBE_TRANSCRIPT_HPP_
