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

#include "mathprobe/puzzle.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "mathprobe/errors.hpp"
#include "mathprobe/rng.hpp"

namespace mathprobe {

namespace {

constexpr char kVarLetters[3] = {'a', 'b', 'c'};

// Wording for the multiplier in scaled hints, matching the surface forms
// "had double the", "had 3 times the", and (for the everyone-scaled kind)
// "had three times the amount of".
std::string k_phrase(int k, bool spelled_out) {
  if (k == 2) return "double";
  if (k == 3) return spelled_out ? "three times" : "3 times";
  throw InvalidArgumentError("scaled hint multiplier must be 2 or 3");
}

std::string term(long long coeff, int var) {
  std::string out;
  if (coeff != 1) out += std::to_string(coeff);
  out += kVarLetters[var];
  return out;
}

}  // namespace

const char* to_string(HintKind kind) {
  switch (kind) {
    case HintKind::kPairSum: return "pair_sum";
    case HintKind::kScaledAll: return "scaled_all";
    case HintKind::kScaledPair: return "scaled_pair";
    case HintKind::kDifference: return "difference";
    case HintKind::kPairVsThird: return "pair_vs_third";
    case HintKind::kAllScaledTotal: return "all_scaled_total";
    case HintKind::kTotal: return "total";
  }
  throw InvalidArgumentError("unknown hint kind");
}

HintKind parse_hint_kind(std::string_view s) {
  for (HintKind kind : all_hint_kinds()) {
    if (s == to_string(kind)) return kind;
  }
  throw InvalidArgumentError("unknown hint kind: " + std::string(s));
}

const std::vector<HintKind>& all_hint_kinds() {
  static const std::vector<HintKind> kinds = {
      HintKind::kPairSum,      HintKind::kScaledAll,
      HintKind::kScaledPair,   HintKind::kDifference,
      HintKind::kPairVsThird,  HintKind::kAllScaledTotal,
      HintKind::kTotal,
  };
  return kinds;
}

EquationRow hint_to_equation(const HintSpec& hint) {
  EquationRow row{{0, 0, 0}, hint.constant};
  switch (hint.kind) {
    case HintKind::kPairSum:
      row.coeffs[hint.persons.at(0)] = 1;
      row.coeffs[hint.persons.at(1)] = 1;
      break;
    case HintKind::kScaledAll:
      row.coeffs = {1, 1, 1};
      row.coeffs[hint.persons.at(0)] = hint.k;
      break;
    case HintKind::kScaledPair:
      row.coeffs[hint.persons.at(0)] = hint.k;
      row.coeffs[hint.persons.at(1)] = 1;
      break;
    case HintKind::kDifference:
      row.coeffs[hint.persons.at(0)] = 1;
      row.coeffs[hint.persons.at(1)] = -1;
      break;
    case HintKind::kPairVsThird:
      row.coeffs[hint.persons.at(0)] = 1;
      row.coeffs[hint.persons.at(1)] = 1;
      row.coeffs[hint.persons.at(2)] = -1;
      break;
    case HintKind::kAllScaledTotal:
      row.coeffs = {hint.k, hint.k, hint.k};
      break;
    case HintKind::kTotal:
      row.coeffs = {1, 1, 1};
      break;
  }
  return row;
}

std::string render_hint(const HintSpec& hint,
                        const std::array<std::string, 3>& names,
                        const std::string& object) {
  const auto name = [&](int slot) -> const std::string& {
    return names.at(static_cast<std::size_t>(hint.persons.at(slot)));
  };
  long long n = hint.constant;
  switch (hint.kind) {
    case HintKind::kPairSum:
      return name(0) + " and " + name(1) + " together have " +
             std::to_string(n) + " " + object + ".";
    case HintKind::kScaledAll:
      return "If " + name(0) + " had " + k_phrase(hint.k, false) + " the " +
             object + ", together they would all have " + std::to_string(n) +
             " " + object + ".";
    case HintKind::kScaledPair:
      return "If " + name(0) + " had " + k_phrase(hint.k, false) + " the " +
             object + ", together with " + name(1) + " they would have " +
             std::to_string(n) + " " + object + ".";
    case HintKind::kDifference:
      if (n < 0) {
        return name(0) + " has " + std::to_string(-n) + " less " + object +
               " than " + name(1) + ".";
      }
      return name(0) + " has " + std::to_string(n) + " more " + object +
             " than " + name(1) + ".";
    case HintKind::kPairVsThird:
      if (n < 0) {
        return name(0) + " and " + name(1) + " together have " +
               std::to_string(-n) + " less " + object + " than " + name(2) +
               ".";
      }
      return name(0) + " and " + name(1) + " together have " +
             std::to_string(n) + " more " + object + " than " + name(2) + ".";
    case HintKind::kAllScaledTotal:
      return "If everyone had " + k_phrase(hint.k, true) + " the amount of " +
             object + ", together they would have " + std::to_string(n) + " " +
             object + ".";
    case HintKind::kTotal:
      return "Together they have " + std::to_string(n) + " " + object + ".";
  }
  throw InvalidArgumentError("unknown hint kind");
}

std::string render_equation(const HintSpec& hint) {
  std::string lhs;
  long long n = hint.constant;
  switch (hint.kind) {
    case HintKind::kPairSum:
      lhs = term(1, hint.persons.at(0)) + " + " + term(1, hint.persons.at(1));
      break;
    case HintKind::kScaledAll: {
      EquationRow row = hint_to_equation(hint);
      lhs = term(row.coeffs[0], 0) + " + " + term(row.coeffs[1], 1) + " + " +
            term(row.coeffs[2], 2);
      break;
    }
    case HintKind::kScaledPair:
      lhs = term(hint.k, hint.persons.at(0)) + " + " +
            term(1, hint.persons.at(1));
      break;
    case HintKind::kDifference:
      lhs = term(1, hint.persons.at(0)) + " - " + term(1, hint.persons.at(1));
      break;
    case HintKind::kPairVsThird:
      lhs = term(1, hint.persons.at(0)) + " + " + term(1, hint.persons.at(1)) +
            " - " + term(1, hint.persons.at(2));
      break;
    case HintKind::kAllScaledTotal:
      lhs = term(hint.k, 0) + " + " + term(hint.k, 1) + " + " + term(hint.k, 2);
      break;
    case HintKind::kTotal:
      lhs = "a + b + c";
      break;
  }
  return lhs + " = " + std::to_string(n);
}

long long det3(const LinearSystem3& s) {
  const auto& a = s.a;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

std::optional<std::array<Rational, 3>> solve_exact(
    const LinearSystem3& system) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      long long c = system.a[i][j];
      if (c > kMaxCoeff || c < -kMaxCoeff) {
        throw OverflowError("solve_exact: coefficient out of bounds");
      }
    }
    long long r = system.b[i];
    if (r > kMaxRhs || r < -kMaxRhs) {
      throw OverflowError("solve_exact: right-hand side out of bounds");
    }
  }
  long long det = det3(system);
  if (det == 0) return std::nullopt;

  std::array<Rational, 3> solution;
  for (int col = 0; col < 3; ++col) {
    LinearSystem3 replaced = system;
    for (int row = 0; row < 3; ++row) {
      replaced.a[row][col] = system.b[row];
    }
    solution[static_cast<std::size_t>(col)] = Rational(det3(replaced), det);
  }
  return solution;
}

PuzzleConfig PuzzleConfig::defaults() {
  PuzzleConfig config;
  config.names = {"Anne", "Bob", "Charlie", "Daniel", "Elise"};
  config.objects = {"apples", "books", "crayons", "dollars", "pencils"};
  config.hint_kinds = all_hint_kinds();
  return config;
}

std::string render_puzzle_question(const std::array<std::string, 3>& names,
                                   const std::string& object,
                                   const std::array<HintSpec, 3>& hints,
                                   int target) {
  std::string q = "There are three people named " + names[0] + ", " +
                  names[1] + " and " + names[2] + ".";
  for (const HintSpec& hint : hints) {
    q += " " + render_hint(hint, names, object);
  }
  q += " How many " + object + " does " +
       names.at(static_cast<std::size_t>(target)) + " have?";
  return q;
}

namespace {

void validate(const PuzzleConfig& config) {
  if (config.names.size() < 3) {
    throw ConfigError("puzzle config needs at least 3 names");
  }
  if (std::set<std::string>(config.names.begin(), config.names.end()).size() !=
      config.names.size()) {
    throw ConfigError("puzzle name pool has duplicates");
  }
  if (config.objects.empty()) {
    throw ConfigError("puzzle config needs at least 1 object");
  }
  if (config.value_min < 1 || config.value_min > config.value_max) {
    throw ConfigError("puzzle value range must satisfy 1 <= min <= max");
  }
  if (config.value_max > kMaxRhs / 9) {
    // Constants reach at most 3 * 3 * value_max; keep them within the
    // solver's right-hand-side bound.
    throw ConfigError("puzzle value_max too large for exact solver bounds");
  }
  if (config.hint_kinds.size() < 3) {
    throw ConfigError("puzzle config needs at least 3 hint kinds");
  }
  std::set<HintKind> distinct(config.hint_kinds.begin(),
                              config.hint_kinds.end());
  if (distinct.size() != config.hint_kinds.size()) {
    throw ConfigError("puzzle hint kind pool has duplicates");
  }
  if (config.max_attempts < 1) {
    throw ConfigError("puzzle max_attempts must be positive");
  }
}

// Draws the parameters and constant of one hint against a fixed solution.
// Returns nullopt when the draw degenerates (a zero constant where the
// wording needs "more"/"less"), which rejects the whole attempt.
std::optional<HintSpec> sample_hint(Rng& rng, HintKind kind,
                                    const std::array<long long, 3>& sol) {
  long long total = sol[0] + sol[1] + sol[2];
  HintSpec h;
  h.kind = kind;
  switch (kind) {
    case HintKind::kPairSum: {
      std::vector<int> pr = rng.sample_indices(3, 2);
      std::sort(pr.begin(), pr.end());
      h.persons = pr;
      h.constant = sol[static_cast<std::size_t>(pr[0])] +
                   sol[static_cast<std::size_t>(pr[1])];
      break;
    }
    case HintKind::kScaledAll: {
      int i = static_cast<int>(rng.below(3));
      h.persons = {i};
      h.k = 2 + static_cast<int>(rng.below(2));
      h.constant = total + (h.k - 1) * sol[static_cast<std::size_t>(i)];
      break;
    }
    case HintKind::kScaledPair: {
      std::vector<int> pr = rng.sample_indices(3, 2);
      h.persons = pr;
      h.k = 2 + static_cast<int>(rng.below(2));
      h.constant = h.k * sol[static_cast<std::size_t>(pr[0])] +
                   sol[static_cast<std::size_t>(pr[1])];
      break;
    }
    case HintKind::kDifference: {
      std::vector<int> pr = rng.sample_indices(3, 2);
      h.persons = pr;
      h.constant = sol[static_cast<std::size_t>(pr[0])] -
                   sol[static_cast<std::size_t>(pr[1])];
      if (h.constant == 0) return std::nullopt;
      break;
    }
    case HintKind::kPairVsThird: {
      int t = static_cast<int>(rng.below(3));
      std::vector<int> others;
      for (int i = 0; i < 3; ++i) {
        if (i != t) others.push_back(i);
      }
      h.persons = {others[0], others[1], t};
      h.constant = sol[static_cast<std::size_t>(others[0])] +
                   sol[static_cast<std::size_t>(others[1])] -
                   sol[static_cast<std::size_t>(t)];
      if (h.constant == 0) return std::nullopt;
      break;
    }
    case HintKind::kAllScaledTotal: {
      h.k = 2 + static_cast<int>(rng.below(2));
      h.constant = h.k * total;
      break;
    }
    case HintKind::kTotal: {
      h.constant = total;
      break;
    }
  }
  return h;
}

}  // namespace

PuzzleProblem gen_puzzle(std::uint64_t seed, const PuzzleConfig& config) {
  validate(config);
  Rng rng(seed);

  PuzzleProblem p;
  std::vector<int> name_idx =
      rng.sample_indices(static_cast<int>(config.names.size()), 3);
  for (int i = 0; i < 3; ++i) {
    p.names[static_cast<std::size_t>(i)] =
        config.names[static_cast<std::size_t>(name_idx[static_cast<std::size_t>(i)])];
  }
  p.object = rng.pick(config.objects);

  bool accepted = false;
  for (int attempt = 0; attempt < config.max_attempts && !accepted;
       ++attempt) {
    for (auto& v : p.solution) v = rng.range(config.value_min, config.value_max);

    std::vector<int> kind_idx =
        rng.sample_indices(static_cast<int>(config.hint_kinds.size()), 3);
    bool degenerate = false;
    for (int i = 0; i < 3 && !degenerate; ++i) {
      HintKind kind =
          config.hint_kinds[static_cast<std::size_t>(kind_idx[static_cast<std::size_t>(i)])];
      std::optional<HintSpec> hint = sample_hint(rng, kind, p.solution);
      if (!hint) {
        degenerate = true;
        break;
      }
      p.hints[static_cast<std::size_t>(i)] = std::move(*hint);
    }
    if (degenerate) continue;

    for (int i = 0; i < 3; ++i) {
      EquationRow row = hint_to_equation(p.hints[static_cast<std::size_t>(i)]);
      p.system.a[static_cast<std::size_t>(i)] = row.coeffs;
      p.system.b[static_cast<std::size_t>(i)] = row.rhs;
    }
    accepted = det3(p.system) != 0;
  }
  if (!accepted) {
    throw GenerationError("gen_puzzle: no nonsingular system within " +
                          std::to_string(config.max_attempts) + " attempts");
  }

  p.target = static_cast<int>(rng.below(3));
  p.question_text =
      render_puzzle_question(p.names, p.object, p.hints, p.target);
  p.ground_truth = p.solution[static_cast<std::size_t>(p.target)];

  // Cross-check the acceptance reasoning: the sampled solution must be what
  // the solver finds.
  std::optional<std::array<Rational, 3>> solved = solve_exact(p.system);
  if (!solved) {
    throw Error(ErrorCode::kInternal, "gen_puzzle: accepted singular system");
  }
  for (int i = 0; i < 3; ++i) {
    if ((*solved)[static_cast<std::size_t>(i)] !=
        Rational(p.solution[static_cast<std::size_t>(i)])) {
      throw Error(ErrorCode::kInternal,
                  "gen_puzzle: solver disagrees with sampled solution");
    }
  }

  char buf[32];
  std::snprintf(buf, sizeof(buf), "puzzle-%016llx",
                static_cast<unsigned long long>(seed));
  p.id = buf;
  return p;
}

const std::vector<std::string>& method_blurbs() {
  static const std::vector<std::string> blurbs = {
      "solving the equation for one variable in terms of the other "
      "variables, then substituting found expression into the other "
      "equations",
      "adding or subtracting equations to eliminate one variable and reduce "
      "the system to a smaller one; repeating the process until you obtain a "
      "system with only one variable",
      "starting with an initial guess for the solution and iteratively "
      "improving your guess until it converges to the actual solution",
  };
  return blurbs;
}

std::string render_example_explanation(const std::array<HintSpec, 3>& hints,
                                       const std::string& method_blurb,
                                       long long answer) {
  // The double space after the equation list is intentional; it matches the
  // fixed surface form of worked examples.
  return "You can transform this puzzle into a system of equations: " +
         render_equation(hints[0]) + "; " + render_equation(hints[1]) + "; " +
         render_equation(hints[2]) + ";  You can find the answer by " +
         method_blurb + ". Using this method you will arrive at the answer " +
         std::to_string(answer) + ".";
}

WorkedExample gen_worked_example(std::uint64_t seed,
                                 const PuzzleConfig& config) {
  WorkedExample ex;
  ex.puzzle = gen_puzzle(derive_seed(seed, {seed_domain::kPuzzleBody}), config);
  Rng rng(derive_seed(seed, {seed_domain::kExampleBlurb}));
  ex.method_blurb = rng.pick(method_blurbs());
  ex.explanation_text = render_example_explanation(
      ex.puzzle.hints, ex.method_blurb, ex.puzzle.ground_truth);
  return ex;
}

}  // namespace mathprobe
