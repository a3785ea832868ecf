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

#ifndef MATHPROBE_TEMPLATING_HPP_
#define MATHPROBE_TEMPLATING_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mathprobe/errors.hpp"

namespace mathprobe {

// Fills "{name}" placeholders in a template. Substitution values are inserted
// verbatim and are never re-scanned, so a value containing "{x}" cannot pull
// in another substitution. A placeholder left unfilled is an error: templates
// are trusted, so a leftover means a template/config mismatch, not user input.
inline std::string fill_template(
    std::string_view tpl,
    const std::vector<std::pair<std::string_view, std::string_view>>& subs) {
  std::string out;
  out.reserve(tpl.size() + 64);
  std::size_t i = 0;
  while (i < tpl.size()) {
    char c = tpl[i];
    if (c != '{') {
      out.push_back(c);
      ++i;
      continue;
    }
    std::size_t close = tpl.find('}', i + 1);
    if (close == std::string_view::npos) {
      throw InvalidArgumentError("template: unterminated '{' placeholder");
    }
    std::string_view name = tpl.substr(i + 1, close - i - 1);
    bool matched = false;
    for (const auto& [key, value] : subs) {
      if (key == name) {
        out.append(value);
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw InvalidArgumentError("template: unknown placeholder {" +
                                 std::string(name) + "}");
    }
    i = close + 1;
  }
  return out;
}

}  // namespace mathprobe

#endif  // MATHPROBE_TEMPLATING_HPP_
