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

#ifndef MATHPROBE_METRICS_HPP_
#define MATHPROBE_METRICS_HPP_

#include <optional>
#include <string_view>
#include <vector>

namespace mathprobe {

// Unit-cost edit distance (insert/delete/substitute) between two strings,
// two-row dynamic programming.
int levenshtein(std::string_view s, std::string_view t);

// Distances compare the decimal digit strings of prediction and truth (sign
// included for negative predictions), not the surrounding sentence. A parse
// failure carries no distances and can never be correct.
struct PerItemScore {
  int edit = 0;
  double rel_edit = 0.0;  // percent of the truth's digit-string length
  double rel_num = 0.0;   // percent of |truth|
  bool correct = false;
  bool parse_failed = false;
};

// truth must be nonzero (the generators only produce positive truths).
PerItemScore score(std::optional<long long> pred, long long truth);

struct Stat {
  double mean = 0.0;
  double sd = 0.0;
};

struct Summary {
  int n = 0;
  int n_parse_failed = 0;
  double accuracy = 0.0;  // percent over all n, failures count as incorrect
  // Absent when every item failed to parse.
  std::optional<Stat> edit;
  std::optional<Stat> rel_edit;
  std::optional<Stat> rel_num;
};

// Mean and sample (n-1) standard deviation over the scored items; parse
// failures are excluded from distance stats but counted in n and accuracy.
// Compensated summation keeps the result permutation-stable to reported
// precision. Empty input is an error.
Summary aggregate(const std::vector<PerItemScore>& scores);

}  // namespace mathprobe

#endif  // MATHPROBE_METRICS_HPP_
