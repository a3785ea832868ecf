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

#ifndef MATHPROBE_PROBLEM_IO_HPP_
#define MATHPROBE_PROBLEM_IO_HPP_

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "mathprobe/arithmetic.hpp"
#include "mathprobe/puzzle.hpp"

namespace mathprobe {

// A generated question of either experiment kind.
struct Problem {
  std::variant<ArithmeticProblem, PuzzleProblem> value;

  bool is_puzzle() const {
    return std::holds_alternative<PuzzleProblem>(value);
  }
  const std::string& id() const;
  const std::string& question_text() const;
  long long ground_truth() const;
};

std::string problem_to_json_line(const Problem& problem);
Problem problem_from_json_line(const std::string& line);

// Whole-file helpers. The serialization is deterministic so a regenerated
// file can be byte-compared against one on disk.
std::string problems_to_jsonl(const std::vector<Problem>& problems);
void write_problems(const std::filesystem::path& path,
                    const std::vector<Problem>& problems);
std::vector<Problem> read_problems(const std::filesystem::path& path);

}  // namespace mathprobe

#endif  // MATHPROBE_PROBLEM_IO_HPP_
