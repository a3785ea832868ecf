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

// Three-person linear-system word puzzles. A puzzle is three natural-language
// hints about how many objects each person holds; the hints encode a 3x3
// integer system with a unique solution, and the question asks for one
// person's count. Variables are always lettered a, b, c in person order.

#ifndef MATHPROBE_PUZZLE_HPP_
#define MATHPROBE_PUZZLE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mathprobe/rational.hpp"

namespace mathprobe {

enum class HintKind {
  kPairSum,         // x_i + x_j = N
  kScaledAll,       // k*x_i + sum of the others = N
  kScaledPair,      // k*x_i + x_j = N
  kDifference,      // x_i - x_j = N (N may be negative)
  kPairVsThird,     // x_i + x_j - x_t = N (N may be negative)
  kAllScaledTotal,  // k*(x_1 + x_2 + x_3) = N
  kTotal,           // x_1 + x_2 + x_3 = N
};

const char* to_string(HintKind kind);
HintKind parse_hint_kind(std::string_view s);
const std::vector<HintKind>& all_hint_kinds();

// One hint. persons holds the referenced person indices in surface order:
// pair_sum {i,j}; scaled_all {i}; scaled_pair {scaled i, companion j};
// difference {i,j}; pair_vs_third {i,j,t}; the total kinds reference nobody.
// k is 1 except for the scaled kinds, where it is 2 or 3.
struct HintSpec {
  HintKind kind;
  std::vector<int> persons;
  int k = 1;
  long long constant = 0;
};

struct EquationRow {
  std::array<long long, 3> coeffs;
  long long rhs;
};

// Coefficient bounds enforced by solve_exact. Generated systems stay far
// inside these; a violation signals a generator bug, not bad luck.
inline constexpr long long kMaxCoeff = 3;
inline constexpr long long kMaxRhs = 10000;

struct LinearSystem3 {
  std::array<std::array<long long, 3>, 3> a;
  std::array<long long, 3> b;
};

EquationRow hint_to_equation(const HintSpec& hint);

// Natural-language rendering of one hint, e.g.
// "If Charlie had double the apples, together with Bob they would have 240
// apples." Negative constants surface through "less than" wording, never as
// a negative literal.
std::string render_hint(const HintSpec& hint,
                        const std::array<std::string, 3>& names,
                        const std::string& object);

// Algebraic rendering with variables a, b, c, e.g. "2c + a = 143". Term order
// follows the hint's surface order, so the scaled term of a scaled_pair comes
// first; right-hand sides may be negative literals here.
std::string render_equation(const HintSpec& hint);

long long det3(const LinearSystem3& system);

// Exact Cramer solve over int64. Returns the unique rational solution, or
// nullopt when the determinant is zero. Throws OverflowError when an entry
// exceeds the declared bounds (|a_ij| <= kMaxCoeff, |b_i| <= kMaxRhs).
std::optional<std::array<Rational, 3>> solve_exact(const LinearSystem3& system);

struct PuzzleConfig {
  std::vector<std::string> names;
  std::vector<std::string> objects;
  long long value_min = 1;
  long long value_max = 100;
  std::vector<HintKind> hint_kinds;
  int max_attempts = 1000;

  static PuzzleConfig defaults();
};

struct PuzzleProblem {
  std::string id;
  std::array<std::string, 3> names;
  std::string object;
  std::array<HintSpec, 3> hints;
  LinearSystem3 system;
  std::array<long long, 3> solution;
  int target;  // person index 0..2
  std::string question_text;
  long long ground_truth;  // == solution[target]
};

std::string render_puzzle_question(const std::array<std::string, 3>& names,
                                   const std::string& object,
                                   const std::array<HintSpec, 3>& hints,
                                   int target);

// Rejection sampling: draw a solution in the configured range and three
// distinct-kind hints whose constants are computed from that solution, then
// accept only when the system's determinant is nonzero, which certifies the
// drawn solution as the unique one. Deterministic per (seed, config); throws
// GenerationError when max_attempts rejections pile up (misconfiguration).
PuzzleProblem gen_puzzle(std::uint64_t seed,
                         const PuzzleConfig& config = PuzzleConfig::defaults());

// Fixed pool of solution-method descriptions quoted inside worked examples.
const std::vector<std::string>& method_blurbs();

struct WorkedExample {
  PuzzleProblem puzzle;
  std::string method_blurb;
  std::string explanation_text;
};

// "You can transform this puzzle into a system of equations: ..." body used
// in worked examples; contains the equations, the method blurb, and the
// answer to the example's own question.
std::string render_example_explanation(const std::array<HintSpec, 3>& hints,
                                       const std::string& method_blurb,
                                       long long answer);

WorkedExample gen_worked_example(
    std::uint64_t seed, const PuzzleConfig& config = PuzzleConfig::defaults());

}  // namespace mathprobe

#endif  // MATHPROBE_PUZZLE_HPP_
