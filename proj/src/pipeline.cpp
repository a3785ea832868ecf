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

#include "mathprobe/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "mathprobe/errors.hpp"
#include "mathprobe/extract.hpp"
#include "mathprobe/rng.hpp"
#include "mathprobe/version.hpp"

namespace mathprobe {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error(ErrorCode::kInternal, "to_chars failed");
  return std::string(buf, end);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for write: " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::string manifest_text(const RunConfig& config) {
  ordered_json j;
  j["tool"] = "mathprobe";
  j["version"] = kVersion;
  ordered_json cfg = ordered_json::object();
  for (const auto& [key, value] : config_to_kv(config)) cfg[key] = value;
  j["config"] = std::move(cfg);
  return j.dump(2) + "\n";
}

// Byte comparison on purpose: the serializations are canonical, so any
// difference means the directory belongs to another configuration.
void check_or_write(const fs::path& path, const std::string& expected,
                    bool is_manifest) {
  if (fs::exists(path)) {
    if (read_file(path) == expected) return;
    if (is_manifest) {
      throw ConfigError(path.string() +
                        ": existing run was produced by a different "
                        "configuration or tool version");
    }
    throw CorruptStoreError(path.string() +
                            ": contents do not match this configuration");
  }
  write_file(path, expected);
}

RunConfig config_from_run_dir(const RunPaths& paths) {
  ordered_json j = ordered_json::parse(read_file(paths.manifest), nullptr,
                                       false);
  if (j.is_discarded() || !j.is_object()) {
    throw CorruptStoreError(paths.manifest.string() + ": unparseable");
  }
  try {
    if (j.at("tool").get<std::string>() != "mathprobe") {
      throw ConfigError(paths.manifest.string() + ": not a mathprobe run");
    }
    if (j.at("version").get<std::string>() != kVersion) {
      throw ConfigError(paths.manifest.string() +
                        ": written by a different tool version");
    }
    std::map<std::string, std::string> kv;
    for (const auto& [key, value] : j.at("config").items()) {
      kv[key] = value.get<std::string>();
    }
    return config_from_kv(kv);
  } catch (const ordered_json::exception& e) {
    throw CorruptStoreError(paths.manifest.string() + ": " + e.what());
  }
}

std::uint64_t band_tag(ExperimentKind experiment, Difficulty difficulty) {
  if (experiment == ExperimentKind::kPuzzle) return 2;
  return difficulty == Difficulty::kEasy ? 0 : 1;
}

std::string indexed_id(const char* prefix, int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%04d", prefix, index);
  return std::string(buf);
}

// Content key for deduplication. Phrasing is deliberately excluded: two
// paraphrases of the same operand pair are still the same question.
std::string arith_key(const ArithmeticProblem& p) {
  return std::string(to_string(p.op)) + ":" + std::to_string(p.a) + ":" +
         std::to_string(p.b);
}

std::string puzzle_key(const PuzzleProblem& p) {
  std::string key;
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < 3; ++c) {
      key += std::to_string(p.system.a[i][c]);
      key += ',';
    }
    key += std::to_string(p.system.b[i]);
    key += ';';
  }
  key += 't';
  key += std::to_string(p.target);
  return key;
}

constexpr int kDedupAttempts = 1000;

Technique effective_technique(const RunConfig& config, const Setting& setting) {
  // Arithmetic baseline rows keep their technique label but send the plain
  // wrap; puzzle rows always send their technique.
  if (config.experiment == ExperimentKind::kArith && !setting.red_team) {
    return Technique::kDefault;
  }
  return setting.technique;
}

ChatRequest request_for(const RunConfig& config, const RenderedPrompt& prompt,
                        const Problem& problem, const Setting& setting) {
  ChatRequest req;
  req.model = config.model;
  req.messages = prompt.messages;
  req.temperature = config.temperature;
  req.top_p = config.top_p;
  req.meta.problem_id = problem.id();
  req.meta.setting_id = setting.id();
  req.meta.ground_truth = problem.ground_truth();
  return req;
}

std::string difficulty_or_example_label(const Setting& setting,
                                        ExperimentKind experiment) {
  if (experiment == ExperimentKind::kArith) {
    return to_string(setting.difficulty.value());
  }
  return setting.with_example.value() ? "example" : "no-example";
}

std::string fmt_stat_cell(const std::optional<Stat>& stat) {
  if (!stat.has_value()) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f (%.3f)", stat->mean, stat->sd);
  return std::string(buf);
}

std::string fmt_accuracy(double accuracy) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", accuracy);
  return std::string(buf);
}

struct GroupedRun {
  std::vector<Setting> settings;
  // parallel to settings: pointers into the question set
  std::vector<std::vector<const Problem*>> question_lists;
};

GroupedRun group_run(const RunConfig& config,
                     const std::vector<Problem>& questions) {
  GroupedRun g;
  g.settings = settings_for(config);
  std::map<Difficulty, std::vector<const Problem*>> by_difficulty;
  std::vector<const Problem*> all;
  for (const Problem& p : questions) {
    all.push_back(&p);
    if (!p.is_puzzle()) {
      by_difficulty[std::get<ArithmeticProblem>(p.value).difficulty]
          .push_back(&p);
    }
  }
  for (const Setting& s : g.settings) {
    if (config.experiment == ExperimentKind::kArith) {
      g.question_lists.push_back(by_difficulty.at(s.difficulty.value()));
    } else {
      g.question_lists.push_back(all);
    }
  }
  return g;
}

// Orders, cross-checks, and aggregates the records, then writes both summary
// files. Settings that have no records yet (partial run being reported) are
// left out rather than rendered empty.
RunResult summarize_and_write(const RunConfig& config, const RunPaths& paths,
                              std::vector<TranscriptRecord> records,
                              const GroupedRun& grouped) {
  std::map<std::string, int> setting_index;
  for (std::size_t i = 0; i < grouped.settings.size(); ++i) {
    setting_index[grouped.settings[i].id()] = static_cast<int>(i);
  }
  for (const TranscriptRecord& r : records) {
    if (!setting_index.count(r.setting_id)) {
      throw CorruptStoreError("transcript names unknown setting: " +
                              r.setting_id);
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [&](const TranscriptRecord& a, const TranscriptRecord& b) {
                     int sa = setting_index.at(a.setting_id);
                     int sb = setting_index.at(b.setting_id);
                     if (sa != sb) return sa < sb;
                     return a.question_index < b.question_index;
                   });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i - 1].setting_id == records[i].setting_id &&
        records[i - 1].question_index == records[i].question_index) {
      throw CorruptStoreError("duplicate transcript record: " +
                              records[i].setting_id + " #" +
                              std::to_string(records[i].question_index));
    }
  }

  RunResult result;
  result.run_dir = paths.dir;
  std::vector<std::vector<PerItemScore>> scores(grouped.settings.size());
  for (const TranscriptRecord& r : records) {
    PerItemScore s;
    if (r.score.has_value()) {
      s = *r.score;
    } else {
      s.parse_failed = true;  // transport error: no answer to score
    }
    if (!r.error.empty()) ++result.n_errors;
    scores[static_cast<std::size_t>(setting_index.at(r.setting_id))].push_back(
        s);
  }
  for (std::size_t i = 0; i < grouped.settings.size(); ++i) {
    if (scores[i].empty()) continue;
    result.rows.push_back(
        SettingSummary{grouped.settings[i], aggregate(scores[i])});
  }
  result.summary_csv = render_summary_csv(result.rows, config.experiment);
  result.summary_md = render_summary_markdown(result.rows, config.experiment);
  write_file(paths.summary_csv, result.summary_csv);
  write_file(paths.summary_md, result.summary_md);
  return result;
}

RunResult run_impl(const RunConfig& config, Backend& backend) {
  validate_config(config);
  RunPaths paths = RunPaths::in(config.out_dir);
  fs::create_directories(paths.dir);
  TemplateSet templates = config.templates_dir.empty()
                              ? TemplateSet::defaults()
                              : TemplateSet::load(config.templates_dir);
  check_or_write(paths.manifest, manifest_text(config), true);
  std::vector<Problem> questions = build_question_set(config);
  check_or_write(paths.questions, problems_to_jsonl(questions), false);
  GroupedRun grouped = group_run(config, questions);

  // Resume: keep persisted pairs after proving they were produced by this
  // exact configuration (the prompt re-derives to the stored hash).
  std::vector<TranscriptRecord> collected;
  std::set<std::pair<std::string, std::string>> done;
  if (fs::exists(paths.transcripts)) {
    bool dropped_tail = false;
    collected = read_transcripts(paths.transcripts, true, &dropped_tail);
    if (dropped_tail) {
      // The torn line must not stay in the middle of the file once new
      // records are appended after it.
      fs::path tmp = paths.transcripts;
      tmp += ".tmp";
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        for (const TranscriptRecord& r : collected) {
          out << transcript_to_json_line(r) << '\n';
        }
        if (!out) throw IoError("cannot rewrite: " + tmp.string());
      }
      fs::rename(tmp, paths.transcripts);
    }
    std::map<std::string, int> setting_index;
    for (std::size_t i = 0; i < grouped.settings.size(); ++i) {
      setting_index[grouped.settings[i].id()] = static_cast<int>(i);
    }
    for (const TranscriptRecord& r : collected) {
      auto it = setting_index.find(r.setting_id);
      if (it == setting_index.end()) {
        throw CorruptStoreError("transcript names unknown setting: " +
                                r.setting_id);
      }
      const Setting& setting = grouped.settings[static_cast<std::size_t>(
          it->second)];
      const auto& qlist =
          grouped.question_lists[static_cast<std::size_t>(it->second)];
      if (r.question_index < 0 ||
          static_cast<std::size_t>(r.question_index) >= qlist.size()) {
        throw CorruptStoreError("transcript question index out of range");
      }
      const Problem& problem = *qlist[static_cast<std::size_t>(
          r.question_index)];
      if (problem.id() != r.question_id) {
        throw CorruptStoreError("transcript question id mismatch: " +
                                r.question_id);
      }
      RenderedPrompt prompt = build_prompt(config, templates, setting,
                                           r.question_index,
                                           problem.question_text());
      if (request_hash(request_for(config, prompt, problem, setting)) !=
          r.request_hash) {
        throw CorruptStoreError(
            "stored request hash does not match this configuration: " +
            r.setting_id + "/" + r.question_id);
      }
      if (!done.insert({r.setting_id, r.question_id}).second) {
        throw CorruptStoreError("duplicate transcript record: " +
                                r.setting_id + "/" + r.question_id);
      }
    }
  }

  struct Job {
    int setting_idx;
    int question_idx;
    const Problem* problem;
  };
  std::vector<Job> jobs;
  for (std::size_t si = 0; si < grouped.settings.size(); ++si) {
    const std::string sid = grouped.settings[si].id();
    const auto& qlist = grouped.question_lists[si];
    for (std::size_t qi = 0; qi < qlist.size(); ++qi) {
      if (done.count({sid, qlist[qi]->id()})) continue;
      jobs.push_back(Job{static_cast<int>(si), static_cast<int>(qi),
                         qlist[qi]});
    }
  }

  TranscriptWriter writer(paths.transcripts);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;  // guards collected and fatal
  std::exception_ptr fatal;

  auto record_fatal = [&](std::exception_ptr e) {
    std::lock_guard<std::mutex> lock(mu);
    if (!fatal) fatal = e;
    stop.store(true);
  };

  auto worker = [&] {
    while (!stop.load()) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      const Job& job = jobs[i];
      const Setting& setting =
          grouped.settings[static_cast<std::size_t>(job.setting_idx)];
      try {
        RenderedPrompt prompt = build_prompt(config, templates, setting,
                                             job.question_idx,
                                             job.problem->question_text());
        ChatRequest req = request_for(config, prompt, *job.problem, setting);

        TranscriptRecord rec;
        rec.question_id = job.problem->id();
        rec.question_index = job.question_idx;
        rec.setting_id = setting.id();
        rec.technique = to_string(setting.technique);
        rec.detail = prompt.kind.detail;
        rec.red_team = setting.red_team;
        rec.example_attached = prompt.example_attached;
        rec.prompt = prompt.messages;
        rec.ground_truth = job.problem->ground_truth();
        rec.request_hash = request_hash(req);
        rec.backend_id = backend.id();
        rec.ts_start = now_iso8601_utc();
        try {
          ChatResponse resp = backend.send(req);
          rec.has_response = true;
          rec.response_content = resp.content;
          rec.latency_ms = resp.latency_ms;
          rec.backend_id = resp.backend_id;
          rec.extraction = extract_final_answer(resp.content);
          rec.score = score(rec.extraction.value, rec.ground_truth);
        } catch (const Error& e) {
          // Per-item transport trouble is recorded and the run moves on;
          // anything else means the run itself is broken.
          if (e.code() == ErrorCode::kNetwork ||
              e.code() == ErrorCode::kRetryExhausted ||
              e.code() == ErrorCode::kProtocol) {
            rec.error = e.what();
          } else {
            throw;
          }
        }
        rec.ts_end = now_iso8601_utc();
        writer.append(rec);
        std::lock_guard<std::mutex> lock(mu);
        collected.push_back(std::move(rec));
      } catch (...) {
        record_fatal(std::current_exception());
        break;
      }
    }
  };

  std::vector<std::thread> threads;
  int n_threads = std::max(1, config.concurrency);
  threads.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (fatal) std::rethrow_exception(fatal);

  RunResult result = summarize_and_write(config, paths, std::move(collected),
                                         grouped);
  result.n_sent = static_cast<int>(jobs.size());
  result.n_skipped = static_cast<int>(done.size());
  return result;
}

}  // namespace

RunPaths RunPaths::in(const fs::path& dir) {
  RunPaths p;
  p.dir = dir;
  p.manifest = dir / "manifest.json";
  p.questions = dir / "questions.jsonl";
  p.transcripts = dir / "transcripts.jsonl";
  p.summary_csv = dir / "summary.csv";
  p.summary_md = dir / "summary.md";
  return p;
}

std::vector<Problem> build_question_set(const RunConfig& config) {
  std::vector<Problem> questions;
  auto generate_band = [&](std::optional<Difficulty> difficulty) {
    const char* prefix =
        difficulty.has_value() ? to_string(*difficulty) : "puzzle";
    std::uint64_t tag = band_tag(config.experiment,
                                 difficulty.value_or(Difficulty::kEasy));
    std::set<std::string> seen;
    for (int index = 0; index < config.n_questions; ++index) {
      bool accepted = false;
      for (int attempt = 0; attempt < kDedupAttempts; ++attempt) {
        std::uint64_t seed = derive_seed(
            config.master_seed,
            {seed_domain::kQuestion, tag, static_cast<std::uint64_t>(index),
             static_cast<std::uint64_t>(attempt)});
        Problem p;
        std::string key;
        if (difficulty.has_value()) {
          Rng rng(seed);
          ArithOp op = config.ops[static_cast<std::size_t>(
              rng.below(config.ops.size()))];
          ArithmeticProblem ap =
              gen_arithmetic(rng.next(), *difficulty, op, config.phrasings);
          key = arith_key(ap);
          p.value = std::move(ap);
        } else {
          PuzzleProblem pp = gen_puzzle(seed, config.puzzle);
          key = puzzle_key(pp);
          p.value = std::move(pp);
        }
        if (!seen.insert(key).second) continue;
        // The id reflects position, not seed, so transcripts stay readable.
        std::string id = indexed_id(prefix, index);
        if (p.is_puzzle()) {
          std::get<PuzzleProblem>(p.value).id = id;
        } else {
          std::get<ArithmeticProblem>(p.value).id = id;
        }
        questions.push_back(std::move(p));
        accepted = true;
        break;
      }
      if (!accepted) {
        throw GenerationError(
            std::string("could not draw a fresh question for band ") + prefix +
            " index " + std::to_string(index) +
            "; the configured space is too small");
      }
    }
  };
  if (config.experiment == ExperimentKind::kArith) {
    for (Difficulty d : config.difficulties) generate_band(d);
  } else {
    generate_band(std::nullopt);
  }
  return questions;
}

std::vector<Setting> settings_for(const RunConfig& config) {
  std::vector<Technique> roster = config.techniques;
  if (roster.empty()) {
    if (config.experiment == ExperimentKind::kArith) {
      roster = {Technique::kCode, Technique::kExplanation,
                Technique::kImpersonation, Technique::kRestorying};
    } else {
      roster = {Technique::kDefault, Technique::kCode, Technique::kExplanation,
                Technique::kImpersonation, Technique::kRestorying};
    }
  }
  return enumerate_settings(config.experiment, roster, config.difficulties,
                            config.example_flags);
}

RenderedPrompt build_prompt(const RunConfig& config,
                            const TemplateSet& templates,
                            const Setting& setting, int question_index,
                            const std::string& question_text) {
  Technique technique = effective_technique(config, setting);
  ContextKind kind;
  kind.technique = technique;
  if (const std::vector<std::string>* pool = config.pools.pool_for(technique)) {
    Rng rng(derive_seed(config.master_seed,
                        {seed_domain::kDetail, hash64(setting.id()),
                         static_cast<std::uint64_t>(question_index)}));
    kind.detail = rng.pick(*pool);
  }
  RenderedPrompt prompt = wrap(question_text, kind, templates);
  if (setting.with_example.value_or(false)) {
    WorkedExample example = gen_worked_example(
        derive_seed(config.master_seed,
                    {seed_domain::kExample, hash64(setting.id()),
                     static_cast<std::uint64_t>(question_index)}),
        config.puzzle);
    prompt = prepend_example(prompt, example, templates);
  }
  return prompt;
}

std::string render_summary_csv(const std::vector<SettingSummary>& rows,
                               ExperimentKind experiment) {
  std::string out =
      "technique,difficulty_or_example,red_team,edit_mean,edit_sd,"
      "rel_edit_mean,rel_edit_sd,rel_num_mean,rel_num_sd,accuracy,n,"
      "n_parse_failed\n";
  for (const SettingSummary& row : rows) {
    out += to_string(row.setting.technique);
    out += ',';
    out += difficulty_or_example_label(row.setting, experiment);
    out += ',';
    out += row.setting.red_team ? "true" : "false";
    auto stat_fields = [&](const std::optional<Stat>& stat) {
      if (stat.has_value()) {
        out += ',';
        out += format_double(stat->mean);
        out += ',';
        out += format_double(stat->sd);
      } else {
        out += ",,";
      }
    };
    stat_fields(row.summary.edit);
    stat_fields(row.summary.rel_edit);
    stat_fields(row.summary.rel_num);
    out += ',';
    out += format_double(row.summary.accuracy);
    out += ',';
    out += std::to_string(row.summary.n);
    out += ',';
    out += std::to_string(row.summary.n_parse_failed);
    out += '\n';
  }
  return out;
}

std::string render_summary_markdown(const std::vector<SettingSummary>& rows,
                                    ExperimentKind experiment) {
  std::string out;
  if (experiment == ExperimentKind::kArith) {
    out +=
        "| Technique | Difficulty | Red teaming | Edit distance (characters) "
        "| Relative edit distance (%) | Relative distance (%) | Accuracy (%) "
        "|\n";
    out += "| --- | --- | --- | --- | --- | --- | --- |\n";
  } else {
    out +=
        "| Technique | Example | Edit distance (characters) | Relative edit "
        "distance (%) | Relative distance (%) | Accuracy (%) |\n";
    out += "| --- | --- | --- | --- | --- | --- |\n";
  }
  for (const SettingSummary& row : rows) {
    out += "| ";
    out += display_name(row.setting.technique);
    out += " | ";
    if (experiment == ExperimentKind::kArith) {
      out += to_string(row.setting.difficulty.value());
      out += " | ";
      out += row.setting.red_team ? "✓" : "";
    } else {
      out += row.setting.with_example.value() ? "✓" : "";
    }
    out += " | ";
    out += fmt_stat_cell(row.summary.edit);
    out += " | ";
    out += fmt_stat_cell(row.summary.rel_edit);
    out += " | ";
    out += fmt_stat_cell(row.summary.rel_num);
    out += " | ";
    out += fmt_accuracy(row.summary.accuracy);
    out += " |\n";
  }
  return out;
}

void generate_questions(const RunConfig& config) {
  validate_config(config);
  RunPaths paths = RunPaths::in(config.out_dir);
  fs::create_directories(paths.dir);
  check_or_write(paths.manifest, manifest_text(config), true);
  check_or_write(paths.questions, problems_to_jsonl(build_question_set(config)),
                 false);
}

RunResult run(const RunConfig& config) {
  validate_config(config);
  std::unique_ptr<Backend> backend = make_backend(config.backend);
  return run_impl(config, *backend);
}

RunResult report_run(const fs::path& run_dir) {
  RunPaths paths = RunPaths::in(run_dir);
  RunConfig config = config_from_run_dir(paths);
  std::vector<TranscriptRecord> records =
      read_transcripts(paths.transcripts, true);
  int n_records = static_cast<int>(records.size());
  std::vector<Problem> questions = build_question_set(config);
  GroupedRun grouped = group_run(config, questions);
  RunResult result = summarize_and_write(config, paths, std::move(records),
                                         grouped);
  result.n_skipped = n_records;
  return result;
}

RunResult rescore_run(const fs::path& run_dir) {
  RunPaths paths = RunPaths::in(run_dir);
  RunConfig config = config_from_run_dir(paths);
  std::vector<TranscriptRecord> records =
      read_transcripts(paths.transcripts, true);
  for (TranscriptRecord& r : records) {
    if (!r.has_response) continue;
    r.extraction = extract_final_answer(r.response_content);
    r.score = score(r.extraction.value, r.ground_truth);
  }
  fs::path tmp = paths.transcripts;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for write: " + tmp.string());
    for (const TranscriptRecord& r : records) {
      out << transcript_to_json_line(r) << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  fs::rename(tmp, paths.transcripts);

  std::vector<Problem> questions = build_question_set(config);
  GroupedRun grouped = group_run(config, questions);
  return summarize_and_write(config, paths, std::move(records), grouped);
}

RunResult replay_run(const fs::path& src_run_dir, const fs::path& out_dir) {
  RunPaths src = RunPaths::in(src_run_dir);
  RunConfig config = config_from_run_dir(src);
  ReplayStore store =
      build_replay_store(read_transcripts(src.transcripts, true));
  config.out_dir = out_dir.string();
  config.backend.kind = BackendSpec::Kind::kReplay;
  config.backend.replay_store = src.transcripts.string();
  std::unique_ptr<Backend> backend = make_replay_backend(std::move(store));
  return run_impl(config, *backend);
}

}  // namespace mathprobe
