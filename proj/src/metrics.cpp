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

#include "mathprobe/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "mathprobe/errors.hpp"

namespace mathprobe {

int levenshtein(std::string_view s, std::string_view t) {
  if (s.size() < t.size()) std::swap(s, t);  // keep the rows short
  std::vector<int> prev(t.size() + 1);
  std::vector<int> cur(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= t.size(); ++j) {
      int subst = prev[j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[t.size()];
}

PerItemScore score(std::optional<long long> pred, long long truth) {
  if (truth == 0) {
    throw InvalidArgumentError("score: zero ground truth");
  }
  PerItemScore item;
  if (!pred) {
    item.parse_failed = true;
    return item;
  }
  std::string ps = std::to_string(*pred);
  std::string ts = std::to_string(truth);
  item.edit = levenshtein(ps, ts);
  item.rel_edit = 100.0 * item.edit / static_cast<double>(ts.size());
  // The difference can exceed int64 when the prediction is a wild outlier,
  // so widen before taking the magnitude.
  __int128 diff = static_cast<__int128>(*pred) - static_cast<__int128>(truth);
  if (diff < 0) diff = -diff;
  double abs_truth = std::abs(static_cast<double>(truth));
  item.rel_num = 100.0 * static_cast<double>(diff) / abs_truth;
  item.correct = (*pred == truth);
  return item;
}

namespace {

// Kahan compensated accumulator; addition order still matters in theory, but
// compensation keeps any order stable to well past the precision we report.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

Stat stat_over(const std::vector<double>& xs) {
  KahanSum sum;
  for (double x : xs) sum.add(x);
  double mean = sum.value() / static_cast<double>(xs.size());
  if (xs.size() == 1) return {mean, 0.0};
  KahanSum sq;
  for (double x : xs) sq.add((x - mean) * (x - mean));
  double variance = sq.value() / static_cast<double>(xs.size() - 1);
  return {mean, std::sqrt(std::max(variance, 0.0))};
}

}  // namespace

Summary aggregate(const std::vector<PerItemScore>& scores) {
  if (scores.empty()) {
    throw InvalidArgumentError("aggregate: empty score list");
  }
  Summary summary;
  summary.n = static_cast<int>(scores.size());

  std::vector<double> edits, rel_edits, rel_nums;
  int n_correct = 0;
  for (const PerItemScore& item : scores) {
    if (item.parse_failed) {
      ++summary.n_parse_failed;
      continue;
    }
    if (item.correct) ++n_correct;
    edits.push_back(static_cast<double>(item.edit));
    rel_edits.push_back(item.rel_edit);
    rel_nums.push_back(item.rel_num);
  }
  summary.accuracy = 100.0 * n_correct / static_cast<double>(summary.n);
  if (!edits.empty()) {
    summary.edit = stat_over(edits);
    summary.rel_edit = stat_over(rel_edits);
    summary.rel_num = stat_over(rel_nums);
  }
  return summary;
}

}  // namespace mathprobe
