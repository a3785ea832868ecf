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

#include "mathprobe/problem_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "mathprobe/errors.hpp"

namespace mathprobe {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json arith_payload(const ArithmeticProblem& p) {
  ordered_json j;
  j["op"] = to_string(p.op);
  j["a"] = p.a;
  j["b"] = p.b;
  j["difficulty"] = to_string(p.difficulty);
  j["phrasing_id"] = p.phrasing_id;
  return j;
}

ordered_json puzzle_payload(const PuzzleProblem& p) {
  ordered_json j;
  j["names"] = {p.names[0], p.names[1], p.names[2]};
  j["object"] = p.object;
  ordered_json hints = ordered_json::array();
  for (const HintSpec& h : p.hints) {
    ordered_json hj;
    hj["kind"] = to_string(h.kind);
    hj["persons"] = h.persons;
    hj["k"] = h.k;
    hj["n"] = h.constant;
    hints.push_back(std::move(hj));
  }
  j["hints"] = std::move(hints);
  ordered_json sys;
  sys["a"] = ordered_json::array();
  for (const auto& row : p.system.a) {
    sys["a"].push_back({row[0], row[1], row[2]});
  }
  sys["b"] = {p.system.b[0], p.system.b[1], p.system.b[2]};
  j["system"] = std::move(sys);
  j["solution"] = {p.solution[0], p.solution[1], p.solution[2]};
  j["target"] = p.target;
  return j;
}

ArithmeticProblem arith_from_payload(const ordered_json& j,
                                     const ordered_json& outer) {
  ArithmeticProblem p;
  p.id = outer.at("id").get<std::string>();
  p.op = parse_arith_op(j.at("op").get<std::string>());
  p.a = j.at("a").get<long long>();
  p.b = j.at("b").get<long long>();
  p.difficulty = parse_difficulty(j.at("difficulty").get<std::string>());
  p.phrasing_id = j.at("phrasing_id").get<int>();
  p.question_text = outer.at("question_text").get<std::string>();
  p.ground_truth = outer.at("ground_truth").get<long long>();
  return p;
}

PuzzleProblem puzzle_from_payload(const ordered_json& j,
                                  const ordered_json& outer) {
  PuzzleProblem p;
  p.id = outer.at("id").get<std::string>();
  const auto& names = j.at("names");
  if (names.size() != 3 || j.at("hints").size() != 3) {
    throw CorruptStoreError("puzzle payload needs 3 names and 3 hints");
  }
  for (int i = 0; i < 3; ++i) p.names[i] = names.at(i).get<std::string>();
  p.object = j.at("object").get<std::string>();
  for (int i = 0; i < 3; ++i) {
    const auto& hj = j.at("hints").at(i);
    HintSpec h;
    h.kind = parse_hint_kind(hj.at("kind").get<std::string>());
    h.persons = hj.at("persons").get<std::vector<int>>();
    h.k = hj.at("k").get<int>();
    h.constant = hj.at("n").get<long long>();
    p.hints[i] = std::move(h);
  }
  const auto& sys = j.at("system");
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < 3; ++c) {
      p.system.a[i][c] = sys.at("a").at(i).at(c).get<long long>();
    }
    p.system.b[i] = sys.at("b").at(i).get<long long>();
  }
  for (int i = 0; i < 3; ++i) {
    p.solution[i] = j.at("solution").at(i).get<long long>();
  }
  p.target = j.at("target").get<int>();
  p.question_text = outer.at("question_text").get<std::string>();
  p.ground_truth = outer.at("ground_truth").get<long long>();
  return p;
}

}  // namespace

const std::string& Problem::id() const {
  if (is_puzzle()) return std::get<PuzzleProblem>(value).id;
  return std::get<ArithmeticProblem>(value).id;
}

const std::string& Problem::question_text() const {
  if (is_puzzle()) return std::get<PuzzleProblem>(value).question_text;
  return std::get<ArithmeticProblem>(value).question_text;
}

long long Problem::ground_truth() const {
  if (is_puzzle()) return std::get<PuzzleProblem>(value).ground_truth;
  return std::get<ArithmeticProblem>(value).ground_truth;
}

std::string problem_to_json_line(const Problem& problem) {
  ordered_json j;
  j["id"] = problem.id();
  j["kind"] = problem.is_puzzle() ? "puzzle" : "arith";
  j["payload"] = problem.is_puzzle()
                     ? puzzle_payload(std::get<PuzzleProblem>(problem.value))
                     : arith_payload(std::get<ArithmeticProblem>(problem.value));
  j["question_text"] = problem.question_text();
  j["ground_truth"] = problem.ground_truth();
  return j.dump();
}

Problem problem_from_json_line(const std::string& line) {
  ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw CorruptStoreError("unparseable problem line");
  }
  try {
    std::string kind = j.at("kind").get<std::string>();
    Problem p;
    if (kind == "puzzle") {
      p.value = puzzle_from_payload(j.at("payload"), j);
    } else if (kind == "arith") {
      p.value = arith_from_payload(j.at("payload"), j);
    } else {
      throw CorruptStoreError("unknown problem kind: " + kind);
    }
    return p;
  } catch (const ordered_json::exception& e) {
    throw CorruptStoreError(std::string("bad problem line: ") + e.what());
  }
}

std::string problems_to_jsonl(const std::vector<Problem>& problems) {
  std::string out;
  for (const Problem& p : problems) {
    out += problem_to_json_line(p);
    out += '\n';
  }
  return out;
}

void write_problems(const std::filesystem::path& path,
                    const std::vector<Problem>& problems) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for write: " + path.string());
  out << problems_to_jsonl(problems);
  if (!out) throw IoError("problem write failed: " + path.string());
}

std::vector<Problem> read_problems(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::vector<Problem> problems;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    problems.push_back(problem_from_json_line(line));
  }
  return problems;
}

}  // namespace mathprobe
