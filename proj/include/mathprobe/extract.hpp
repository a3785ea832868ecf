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

#ifndef MATHPROBE_EXTRACT_HPP_
#define MATHPROBE_EXTRACT_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

namespace mathprobe {

enum class ExtractMethod { kMarker, kLastNumber, kNone };

const char* to_string(ExtractMethod method);
ExtractMethod parse_extract_method(std::string_view s);

struct Extraction {
  std::size_t raw_len = 0;  // response length in bytes
  bool marker_found = false;
  std::optional<long long> value;
  ExtractMethod method = ExtractMethod::kNone;
};

// Pulls one integer final answer out of a free-text model response.
//
// Rule order:
//   1. Find the last "[FINAL ANSWER]" marker (case-insensitive, whitespace
//      tolerated inside the brackets). If any integer token follows it, the
//      answer is the last such token and method=marker. Responses routinely
//      restate the question after the marker ("The product of numbers 3499
//      and 4691 is 16411309."), so the answer is the trailing number, not
//      the first.
//   2. No marker, or nothing after it: the last integer token anywhere in
//      the text, method=last_number.
//   3. Nothing at all: method=none, value absent.
//
// Integer tokens accept digit-grouping separators (comma, space, and the
// thin/narrow/no-break space codepoints) when each separator is followed by
// exactly three digits. A '-' immediately before the digits is honored when
// it does not abut a preceding alphanumeric (so "x-5" and "3-2" contribute 5
// and 2, not -5 and -2). Tokens containing a decimal point are rejected
// whole: ground truths are integers, and "3.14" must not leak a 3 or a 14.
Extraction extract_final_answer(std::string_view text);

}  // namespace mathprobe

#endif  // MATHPROBE_EXTRACT_HPP_
