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

#include "mathprobe/extract.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "mathprobe/errors.hpp"

namespace mathprobe {

const char* to_string(ExtractMethod method) {
  switch (method) {
    case ExtractMethod::kMarker: return "marker";
    case ExtractMethod::kLastNumber: return "last_number";
    case ExtractMethod::kNone: return "none";
  }
  throw InvalidArgumentError("unknown extract method");
}

ExtractMethod parse_extract_method(std::string_view s) {
  if (s == "marker") return ExtractMethod::kMarker;
  if (s == "last_number") return ExtractMethod::kLastNumber;
  if (s == "none") return ExtractMethod::kNone;
  throw InvalidArgumentError("unknown extract method: " + std::string(s));
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool matches_ci(std::string_view text, std::size_t pos, std::string_view word) {
  if (pos + word.size() > text.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char a = text[pos + i];
    char b = word[i];
    if (std::tolower(static_cast<unsigned char>(a)) != b) return false;
  }
  return true;
}

// Byte length of a digit-grouping separator starting at pos: ',' and ' '
// plus the UTF-8 encodings of U+00A0, U+2009, and U+202F. Returns 0 when
// none matches.
std::size_t separator_len(std::string_view text, std::size_t pos) {
  char c = text[pos];
  if (c == ',' || c == ' ') return 1;
  if (static_cast<unsigned char>(c) == 0xC2 && pos + 1 < text.size() &&
      static_cast<unsigned char>(text[pos + 1]) == 0xA0) {
    return 2;  // U+00A0 no-break space
  }
  if (static_cast<unsigned char>(c) == 0xE2 && pos + 2 < text.size() &&
      static_cast<unsigned char>(text[pos + 1]) == 0x80) {
    unsigned char third = static_cast<unsigned char>(text[pos + 2]);
    if (third == 0x89 || third == 0xAF) return 3;  // U+2009 / U+202F
  }
  return 0;
}

struct Token {
  long long value;
  std::size_t start;
};

// One numeric lexeme starting at `pos` (which sits on a digit or on a '-'
// directly before one). Advances pos past the lexeme. Returns a token unless
// the lexeme is disqualified (decimal point, or magnitude beyond int64).
std::optional<Token> lex_number(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }

  std::string digits;
  bool overflowed = false;
  std::size_t leading = 0;
  while (pos < text.size() && is_digit(text[pos])) {
    digits.push_back(text[pos]);
    ++pos;
    ++leading;
  }

  // Grouped continuation: each separator must be followed by exactly three
  // digits. Only short leading groups start a grouped number; "12345 678"
  // is two numbers, not 12345678.
  if (leading >= 1 && leading <= 3) {
    for (;;) {
      std::size_t sep = separator_len(text, pos);
      if (sep == 0 || pos + sep >= text.size()) break;
      std::size_t group = pos + sep;
      if (group + 3 > text.size()) break;
      if (!is_digit(text[group]) || !is_digit(text[group + 1]) ||
          !is_digit(text[group + 2])) {
        break;
      }
      if (group + 3 < text.size() && is_digit(text[group + 3])) break;
      digits.append(text.substr(group, 3));
      pos = group + 3;
    }
  }

  // Decimal rejection: consume the full dotted run so "3.14" yields neither
  // 3 nor 14.
  bool decimal = false;
  while (pos + 1 < text.size() && text[pos] == '.' && is_digit(text[pos + 1])) {
    decimal = true;
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
  }
  if (decimal) return std::nullopt;

  unsigned long long magnitude = 0;
  const unsigned long long limit =
      static_cast<unsigned long long>(std::numeric_limits<long long>::max());
  for (char d : digits) {
    unsigned long long digit = static_cast<unsigned long long>(d - '0');
    if (magnitude > (limit - digit) / 10) {
      overflowed = true;
      break;
    }
    magnitude = magnitude * 10 + digit;
  }
  if (overflowed) return std::nullopt;

  long long value = static_cast<long long>(magnitude);
  return Token{negative ? -value : value, start};
}

std::vector<Token> scan_tokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    bool starts_number = false;
    if (is_digit(c)) {
      starts_number = true;
    } else if (c == '-' && pos + 1 < text.size() && is_digit(text[pos + 1])) {
      starts_number = pos == 0 || !is_alnum(text[pos - 1]);
      if (!starts_number) {
        ++pos;  // step onto the digit; the positive token still counts
        continue;
      }
    }
    if (!starts_number) {
      ++pos;
      continue;
    }
    std::optional<Token> token = lex_number(text, pos);
    if (token) tokens.push_back(*token);
  }
  return tokens;
}

// Matches the marker "[FINAL ANSWER]" at an opening bracket, tolerating
// whitespace inside the brackets. Returns the offset just past ']'.
std::optional<std::size_t> match_marker(std::string_view text,
                                        std::size_t open) {
  std::size_t pos = open + 1;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (!matches_ci(text, pos, "final")) return std::nullopt;
  pos += 5;
  std::size_t gap = pos;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos == gap) return std::nullopt;  // "finalanswer" is not the marker
  if (!matches_ci(text, pos, "answer")) return std::nullopt;
  pos += 6;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos >= text.size() || text[pos] != ']') return std::nullopt;
  return pos + 1;
}

std::optional<std::size_t> find_last_marker_end(std::string_view text) {
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '[') continue;
    std::optional<std::size_t> end = match_marker(text, i);
    if (end) last = end;
  }
  return last;
}

}  // namespace

Extraction extract_final_answer(std::string_view text) {
  Extraction out;
  out.raw_len = text.size();

  std::vector<Token> tokens = scan_tokens(text);
  std::optional<std::size_t> marker_end = find_last_marker_end(text);
  out.marker_found = marker_end.has_value();

  if (marker_end) {
    const Token* last_after = nullptr;
    for (const Token& t : tokens) {
      if (t.start >= *marker_end) last_after = &t;
    }
    if (last_after) {
      out.value = last_after->value;
      out.method = ExtractMethod::kMarker;
      return out;
    }
  }
  if (!tokens.empty()) {
    out.value = tokens.back().value;
    out.method = ExtractMethod::kLastNumber;
    return out;
  }
  out.method = ExtractMethod::kNone;
  return out;
}

}  // namespace mathprobe
