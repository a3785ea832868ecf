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

#ifndef MATHPROBE_ARITHMETIC_HPP_
#define MATHPROBE_ARITHMETIC_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mathprobe {

enum class ArithOp { kAdd, kMul };
enum class Difficulty { kEasy, kHard };

const char* to_string(ArithOp op);
const char* to_string(Difficulty difficulty);
ArithOp parse_arith_op(std::string_view s);
Difficulty parse_difficulty(std::string_view s);

// Operand interval, inclusive on both ends.
struct OperandBand {
  long long lo;
  long long hi;
};

// Easy questions draw operands from [1, 100], hard ones from [1000, 10000].
// Hard products therefore top out at 10^8.
OperandBand band_for(Difficulty difficulty);

// Paraphrase templates per operation, using {a} and {b} placeholders. The
// defaults carry four equivalent phrasings per op; configs may swap in their
// own pools.
struct PhrasingPools {
  std::vector<std::string> add;
  std::vector<std::string> mul;

  static PhrasingPools defaults();
  const std::vector<std::string>& for_op(ArithOp op) const {
    return op == ArithOp::kAdd ? add : mul;
  }
};

struct ArithmeticProblem {
  std::string id;
  ArithOp op;
  long long a;
  long long b;
  Difficulty difficulty;
  int phrasing_id;
  std::string question_text;
  long long ground_truth;
};

// Pure render; regenerating from the same (op, a, b, phrasing_id) is
// byte-identical.
std::string render_arithmetic_question(ArithOp op, long long a, long long b,
                                       int phrasing_id,
                                       const PhrasingPools& pools);

// Deterministic per (seed, difficulty, op): operands uniform in the band,
// phrasing uniform over the pool for that op.
ArithmeticProblem gen_arithmetic(
    std::uint64_t seed, Difficulty difficulty, ArithOp op,
    const PhrasingPools& pools = PhrasingPools::defaults());

}  // namespace mathprobe

#endif  // MATHPROBE_ARITHMETIC_HPP_
