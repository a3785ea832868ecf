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

#ifndef MATHPROBE_RATIONAL_HPP_
#define MATHPROBE_RATIONAL_HPP_

#include <cstdint>
#include <numeric>

#include "mathprobe/errors.hpp"

namespace mathprobe {

// Exact fraction over int64. Only what the linear solver needs: construction,
// normalization, equality, and integer extraction. Inputs in this codebase
// are small (determinants and adjugate sums of 3x3 systems with tiny
// coefficients), so int64 never gets close to overflow after normalization.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidArgumentError("Rational: zero denominator");
    normalize();
  }
  // NOLINTNEXTLINE(google-explicit-constructor): integers promote naturally.
  Rational(long long value) : num_(value), den_(1) {}

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // Value as long long; requires is_integer().
  long long as_integer() const {
    if (!is_integer()) {
      throw InvalidArgumentError("Rational::as_integer: not an integer");
    }
    return num_;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace mathprobe

#endif  // MATHPROBE_RATIONAL_HPP_
