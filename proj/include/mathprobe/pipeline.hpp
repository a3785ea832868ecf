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

// The batch harness: builds the question set, wraps each question per
// setting, queries the backend, scores the responses, and writes the run
// directory (manifest, questions, transcripts, summaries).
//
// Determinism contract: with a simulated backend, every per-item result is a
// pure function of the run config, so reruns, resumed runs, and runs at any
// concurrency produce byte-identical question files and summaries.

#ifndef MATHPROBE_PIPELINE_HPP_
#define MATHPROBE_PIPELINE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "mathprobe/config.hpp"
#include "mathprobe/contexts.hpp"
#include "mathprobe/metrics.hpp"
#include "mathprobe/problem_io.hpp"
#include "mathprobe/transcript.hpp"

namespace mathprobe {

struct RunPaths {
  std::filesystem::path dir;
  std::filesystem::path manifest;
  std::filesystem::path questions;
  std::filesystem::path transcripts;
  std::filesystem::path summary_csv;
  std::filesystem::path summary_md;

  static RunPaths in(const std::filesystem::path& dir);
};

// The full question set for a run: n questions per difficulty for the
// arithmetic experiment (ids easy-0000.., hard-0000..), n puzzles otherwise
// (ids puzzle-0000..). Question bodies are deduplicated within a band by
// reseeding, so repeated questions cannot occur.
std::vector<Problem> build_question_set(const RunConfig& config);

// The run's report rows, in table order. Applies the experiment's default
// technique roster when the config names none.
std::vector<Setting> settings_for(const RunConfig& config);

// The exact prompt sent for (setting, question). question_index is the
// question's position within the setting's question list; it feeds the
// detail and worked-example draws, so the prompt depends only on config,
// setting, and index.
RenderedPrompt build_prompt(const RunConfig& config,
                            const TemplateSet& templates,
                            const Setting& setting, int question_index,
                            const std::string& question_text);

struct SettingSummary {
  Setting setting;
  Summary summary;
};

// summary.csv: one row per setting, raw full-precision numbers, empty cells
// when a whole setting failed to parse.
std::string render_summary_csv(const std::vector<SettingSummary>& rows,
                               ExperimentKind experiment);
// summary.md: the report table, mean (sd) distance cells rounded to three
// decimals, accuracy to one.
std::string render_summary_markdown(const std::vector<SettingSummary>& rows,
                                    ExperimentKind experiment);

struct RunResult {
  std::filesystem::path run_dir;
  int n_sent = 0;     // requests issued by this invocation
  int n_skipped = 0;  // pairs already present from an earlier invocation
  int n_errors = 0;   // records carrying a transport error, in total
  std::vector<SettingSummary> rows;
  std::string summary_csv;
  std::string summary_md;
};

// Writes manifest and questions.jsonl without querying any backend.
void generate_questions(const RunConfig& config);

// Executes the run into config.out_dir. An existing directory resumes:
// (question, setting) pairs already in the transcript are kept after their
// request hashes are re-derived and checked, and only the remainder is sent.
// Transport failures (network, retry exhaustion, protocol) become error
// records and count as parse failures; auth, config, and store corruption
// abort.
RunResult run(const RunConfig& config);

// Recomputes summaries from a run directory as it stands.
RunResult report_run(const std::filesystem::path& run_dir);

// Re-extracts and re-scores every stored response, rewrites the transcript
// atomically, then reports. Useful after extraction-rule fixes.
RunResult rescore_run(const std::filesystem::path& run_dir);

// Re-executes a finished run from its own recorded responses into a fresh
// directory. Byte-identical summaries certify that scoring is a pure
// function of the transcripts.
RunResult replay_run(const std::filesystem::path& src_run_dir,
                     const std::filesystem::path& out_dir);

}  // namespace mathprobe

#endif  // MATHPROBE_PIPELINE_HPP_
