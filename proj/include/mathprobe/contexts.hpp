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

// Prompt wrapping. A Context reframes a question with one of five
// techniques; the default technique passes the question through untouched
// and serves as the baseline.

#ifndef MATHPROBE_CONTEXTS_HPP_
#define MATHPROBE_CONTEXTS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mathprobe/arithmetic.hpp"
#include "mathprobe/puzzle.hpp"

namespace mathprobe {

enum class Technique {
  kDefault,
  kCode,
  kExplanation,
  kImpersonation,
  kRestorying,
};

const char* to_string(Technique technique);
Technique parse_technique(std::string_view s);
// Row label used in reports ("Re-storying", matching the tables' spelling).
const char* display_name(Technique technique);

// Technique plus its variant selector: the code language, mathematician, or
// story frame. Default and explanation take no detail.
struct ContextKind {
  Technique technique = Technique::kDefault;
  std::string detail;
};

struct Message {
  std::string role;  // "system" or "user"
  std::string content;
};

struct RenderedPrompt {
  std::vector<Message> messages;  // one system + one user message
  ContextKind kind;
  bool example_attached = false;
};

// Variant pools for the detail-bearing techniques; config-exposed.
struct ContextPools {
  std::vector<std::string> code_languages;
  std::vector<std::string> mathematicians;
  std::vector<std::string> frames;

  static ContextPools defaults();
  // nullptr for techniques that take no detail.
  const std::vector<std::string>* pool_for(Technique technique) const;
};

// The wrapper surface strings. Placeholders: {question} and {detail} in the
// wrappers; {example_question}, {explanation}, {prompt} in the example
// block. Kept embedded here and mirrored by the plain-text files under
// templates/, which a config may point at to swap the wording.
struct TemplateSet {
  std::string system_instruction;
  std::string default_wrap;
  std::string code;
  std::string explanation;
  std::string impersonation;
  std::string restorying;
  std::string example_block;

  static TemplateSet defaults();
  // Loads one file per field from dir (system_instruction.txt, code.txt,
  // ...). Exactly one trailing newline per file is stripped.
  static TemplateSet load(const std::filesystem::path& dir);

  const std::string& wrapper_for(Technique technique) const;
};

// Wraps a question in the given context. The system message carries the
// final-answer-marker instruction; the user message is the filled wrapper.
// Detail must be empty for default/explanation and non-empty otherwise.
RenderedPrompt wrap(const std::string& question_text, const ContextKind& kind,
                    const TemplateSet& templates = TemplateSet::defaults());

// Prepends the worked-example block inside the user message, before the
// context wrapper text. Attaching twice is an error.
RenderedPrompt prepend_example(
    const RenderedPrompt& prompt, const WorkedExample& example,
    const TemplateSet& templates = TemplateSet::defaults());

enum class ExperimentKind { kArith, kPuzzle };

const char* to_string(ExperimentKind kind);
ExperimentKind parse_experiment(std::string_view s);

// One report row / transcript partition. Arithmetic rows carry a difficulty
// and a red-team flag (flag off means the question is sent through the
// default wrap but still grouped under the technique's row). Puzzle rows
// carry a with-example flag; there the technique itself is or isn't a
// red-teaming attempt, which red_team records.
struct Setting {
  Technique technique = Technique::kDefault;
  bool red_team = false;
  std::optional<Difficulty> difficulty;  // arithmetic only
  std::optional<bool> with_example;      // puzzle only

  std::string id() const;
};

// Row order matches the report tables: techniques outermost, then
// difficulty, red-team on before off (experiment 1) or example before
// no-example (experiment 2). An empty technique list yields baseline-only
// rows.
std::vector<Setting> enumerate_settings(
    ExperimentKind experiment, std::vector<Technique> techniques,
    const std::vector<Difficulty>& difficulties,
    const std::vector<bool>& example_flags);

}  // namespace mathprobe

#endif  // MATHPROBE_CONTEXTS_HPP_
