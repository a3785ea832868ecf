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

// Command-line front end. All real work happens behind the C API; this file
// only maps flags onto config keys and prints results.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mathprobe.h"

namespace {

int fail(mp_status status) {
  std::cerr << "error: " << mp_last_error() << "\n";
  return static_cast<int>(status);
}

struct ConfigHandle {
  mp_config* ptr;
  ConfigHandle() : ptr(mp_config_new()) {}
  ~ConfigHandle() { mp_config_free(ptr); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
};

// Flag values are collected as key=value assignments and applied in order:
// config file first, then named flags, then --set overrides.
struct PendingConfig {
  std::string config_file;
  std::vector<std::pair<std::string, std::string>> assignments;
  std::vector<std::string> raw_sets;

  void add_common_options(CLI::App* cmd) {
    cmd->add_option("--config", config_file,
                    "key=value config file applied before flags");
    auto bind = [this, cmd](const char* flag, const char* key,
                            const char* help) {
      cmd->add_option_function<std::string>(
             flag,
             [this, key](const std::string& v) {
               assignments.emplace_back(key, v);
             },
             help)
          ->type_name("TEXT");
    };
    bind("--experiment", "experiment", "arith or puzzle");
    bind("--difficulty", "difficulty", "easy, hard, or both (arith)");
    bind("--with-example", "with_example", "yes, no, or both (puzzle)");
    bind("--techniques", "techniques",
         "comma list: default,code,explanation,impersonation,restorying");
    bind("--ops", "ops", "add, mul, or both (arith)");
    bind("--n", "n", "questions per band");
    bind("--seed", "seed", "master seed");
    bind("--model", "model", "model name sent to the backend");
    bind("--temperature", "temperature", "sampling temperature");
    bind("--top-p", "top_p", "nucleus sampling cutoff");
    bind("--backend", "backend", "oracle, perturb, replay, or http");
    bind("--out", "out", "run directory");
    bind("--concurrency", "concurrency", "worker threads");
    cmd->add_option("--set", raw_sets, "extra key=value override")
        ->type_name("KEY=VALUE");
  }

  // Applies everything onto config; returns MP_OK or the first failure.
  mp_status apply(mp_config* config, std::string* out_dir) {
    *out_dir = "out";
    if (!config_file.empty()) {
      mp_status s = mp_config_load_file(config, config_file.c_str());
      if (s != MP_OK) return s;
      std::ifstream in(config_file);
      std::string line;
      while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        if (key == "out") *out_dir = line.substr(eq + 1);
      }
    }
    for (const std::string& raw : raw_sets) {
      auto eq = raw.find('=');
      if (eq == std::string::npos) {
        std::cerr << "error: --set expects key=value, got: " << raw << "\n";
        return MP_ERR_INVALID_ARGUMENT;
      }
      assignments.emplace_back(raw.substr(0, eq), raw.substr(eq + 1));
    }
    for (const auto& [key, value] : assignments) {
      mp_status s = mp_config_set(config, key.c_str(), value.c_str());
      if (s != MP_OK) return s;
      if (key == "out") *out_dir = value;
    }
    return MP_OK;
  }
};

void print_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  std::cout << in.rdbuf();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mathprobe: procedural math questions against chat models"};
  app.set_version_flag("--version", std::string(mp_version()));
  app.require_subcommand(1);

  PendingConfig gen_cfg;
  CLI::App* gen = app.add_subcommand(
      "generate", "write the manifest and question set, query nothing");
  gen_cfg.add_common_options(gen);

  PendingConfig run_cfg;
  CLI::App* run = app.add_subcommand(
      "run", "execute or resume a run and print its report");
  run_cfg.add_common_options(run);

  std::string score_from;
  CLI::App* score = app.add_subcommand(
      "score", "re-extract and re-score stored responses in a run");
  score->add_option("--from", score_from, "run directory")->required();

  std::string report_from;
  CLI::App* report = app.add_subcommand(
      "report", "rebuild and print the report of an existing run");
  report->add_option("--from", report_from, "run directory")->required();

  std::string replay_from, replay_out;
  CLI::App* replay = app.add_subcommand(
      "replay", "re-execute a run from its recorded responses");
  replay->add_option("--from", replay_from, "source run directory")
      ->required();
  replay->add_option("--out", replay_out, "destination run directory")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    ConfigHandle config;
    if (!config.ptr) return static_cast<int>(MP_ERR_INTERNAL);
    std::string out_dir;
    mp_status s = gen_cfg.apply(config.ptr, &out_dir);
    if (s != MP_OK) return fail(s);
    s = mp_generate(config.ptr);
    if (s != MP_OK) return fail(s);
    std::cout << "questions written to " << out_dir << "\n";
    return 0;
  }

  if (run->parsed()) {
    ConfigHandle config;
    if (!config.ptr) return static_cast<int>(MP_ERR_INTERNAL);
    std::string out_dir;
    mp_status s = run_cfg.apply(config.ptr, &out_dir);
    if (s != MP_OK) return fail(s);
    mp_run_stats stats{};
    s = mp_run(config.ptr, &stats);
    if (s != MP_OK) return fail(s);
    print_file(out_dir + "/summary.md");
    std::cerr << "sent " << stats.n_sent << ", resumed " << stats.n_skipped
              << ", errors " << stats.n_errors << "\n";
    return 0;
  }

  if (score->parsed()) {
    mp_status s = mp_rescore(score_from.c_str());
    if (s != MP_OK) return fail(s);
    print_file(score_from + "/summary.md");
    return 0;
  }

  if (report->parsed()) {
    mp_status s = mp_report(report_from.c_str());
    if (s != MP_OK) return fail(s);
    print_file(report_from + "/summary.md");
    return 0;
  }

  if (replay->parsed()) {
    mp_status s = mp_replay(replay_from.c_str(), replay_out.c_str());
    if (s != MP_OK) return fail(s);
    print_file(replay_out + "/summary.md");
    return 0;
  }

  return 0;
}
