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

#include "mathprobe/arithmetic.hpp"

#include <cstdio>

#include "mathprobe/errors.hpp"
#include "mathprobe/rng.hpp"
#include "mathprobe/templating.hpp"

namespace mathprobe {

const char* to_string(ArithOp op) {
  return op == ArithOp::kAdd ? "add" : "mul";
}

const char* to_string(Difficulty difficulty) {
  return difficulty == Difficulty::kEasy ? "easy" : "hard";
}

ArithOp parse_arith_op(std::string_view s) {
  if (s == "add") return ArithOp::kAdd;
  if (s == "mul") return ArithOp::kMul;
  throw InvalidArgumentError("unknown arithmetic op: " + std::string(s));
}

Difficulty parse_difficulty(std::string_view s) {
  if (s == "easy") return Difficulty::kEasy;
  if (s == "hard") return Difficulty::kHard;
  throw InvalidArgumentError("unknown difficulty: " + std::string(s));
}

OperandBand band_for(Difficulty difficulty) {
  if (difficulty == Difficulty::kEasy) return {1, 100};
  return {1000, 10000};
}

PhrasingPools PhrasingPools::defaults() {
  PhrasingPools pools;
  pools.add = {
      "What is the sum of {a} and {b}?",
      "Provide the sum of {a} and {b}.",
      "What is the sum of numbers {a} and {b}?",
      "Add {a} and {b}.",
  };
  pools.mul = {
      "What is the product of {a} and {b}?",
      "Provide the product of {a} and {b}.",
      "What is the product of numbers {a} and {b}?",
      "Multiply {a} and {b}.",
  };
  return pools;
}

std::string render_arithmetic_question(ArithOp op, long long a, long long b,
                                       int phrasing_id,
                                       const PhrasingPools& pools) {
  const std::vector<std::string>& pool = pools.for_op(op);
  if (phrasing_id < 0 || static_cast<std::size_t>(phrasing_id) >= pool.size()) {
    throw InvalidArgumentError("phrasing_id out of range for op pool");
  }
  return fill_template(pool[static_cast<std::size_t>(phrasing_id)],
                       {{"a", std::to_string(a)}, {"b", std::to_string(b)}});
}

ArithmeticProblem gen_arithmetic(std::uint64_t seed, Difficulty difficulty,
                                 ArithOp op, const PhrasingPools& pools) {
  const std::vector<std::string>& pool = pools.for_op(op);
  if (pool.empty()) {
    throw ConfigError("empty paraphrase pool for op " +
                      std::string(to_string(op)));
  }
  Rng rng(seed);
  OperandBand band = band_for(difficulty);

  ArithmeticProblem p;
  p.op = op;
  p.a = rng.range(band.lo, band.hi);
  p.b = rng.range(band.lo, band.hi);
  p.difficulty = difficulty;
  p.phrasing_id = static_cast<int>(rng.below(pool.size()));
  p.question_text =
      render_arithmetic_question(op, p.a, p.b, p.phrasing_id, pools);
  p.ground_truth = op == ArithOp::kAdd ? p.a + p.b : p.a * p.b;

  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s-%s-%016llx", to_string(op),
                to_string(difficulty),
                static_cast<unsigned long long>(seed));
  p.id = buf;
  return p;
}

}  // namespace mathprobe
