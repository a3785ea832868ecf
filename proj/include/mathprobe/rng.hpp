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

// Deterministic randomness for question generation and the simulated
// backends. Everything here is fixed bit-for-bit across platforms and
// standard library versions, which is why std::uniform_int_distribution and
// friends (whose output is implementation defined) are not used anywhere.

#ifndef MATHPROBE_RNG_HPP_
#define MATHPROBE_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "mathprobe/errors.hpp"

namespace mathprobe {

// splitmix64, the finalizer from Steele et al. Small state, passes BigCrush,
// and trivially seedable from a single word.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Rejection sampling keeps the draw unbiased for every
  // n, not just powers of two.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InvalidArgumentError("Rng::below: n must be positive");
    std::uint64_t threshold = (0 - n) % n;  // == 2^64 mod n
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [lo, hi], inclusive on both ends.
  long long range(long long lo, long long hi) {
    if (lo > hi) throw InvalidArgumentError("Rng::range: empty interval");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(below(span));
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return unit() < p;
  }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    if (pool.empty()) throw InvalidArgumentError("Rng::pick: empty pool");
    return pool[static_cast<std::size_t>(below(pool.size()))];
  }

  // Draws k distinct indices from [0, n) in draw order (partial
  // Fisher-Yates over an index table).
  std::vector<int> sample_indices(int n, int k) {
    if (k < 0 || k > n) {
      throw InvalidArgumentError("Rng::sample_indices: k out of range");
    }
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      std::size_t j =
          static_cast<std::size_t>(i) +
          static_cast<std::size_t>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
      out.push_back(idx[static_cast<std::size_t>(i)]);
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

// FNV-1a, 64 bit. Used to fold strings (setting ids, question ids) into seed
// derivations.
inline std::uint64_t hash64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Derives an independent stream seed from a master seed and a list of
// domain-separation words. Each word is absorbed through the splitmix64
// finalizer, so (master, {1, 2}) and (master, {2, 1}) land far apart.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = master;
  for (std::uint64_t p : parts) {
    Rng mix(h ^ (p + 0x9E3779B97F4A7C15ull));
    h = mix.next();
  }
  return h;
}

// Domain-separation tags for derive_seed. Keeping them in one place makes it
// obvious that no two call sites share a stream by accident.
namespace seed_domain {
inline constexpr std::uint64_t kQuestion = 1;
inline constexpr std::uint64_t kDetail = 2;
inline constexpr std::uint64_t kExample = 3;
inline constexpr std::uint64_t kPerturb = 4;
inline constexpr std::uint64_t kPuzzleBody = 5;
inline constexpr std::uint64_t kExampleBlurb = 6;
}  // namespace seed_domain

}  // namespace mathprobe

#endif  // MATHPROBE_RNG_HPP_
