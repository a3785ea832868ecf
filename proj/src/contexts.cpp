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

#include "mathprobe/contexts.hpp"

#include <fstream>
#include <sstream>

#include "mathprobe/errors.hpp"
#include "mathprobe/templating.hpp"

namespace mathprobe {

const char* to_string(Technique technique) {
  switch (technique) {
    case Technique::kDefault: return "default";
    case Technique::kCode: return "code";
    case Technique::kExplanation: return "explanation";
    case Technique::kImpersonation: return "impersonation";
    case Technique::kRestorying: return "restorying";
  }
  throw InvalidArgumentError("unknown technique");
}

Technique parse_technique(std::string_view s) {
  if (s == "default") return Technique::kDefault;
  if (s == "code") return Technique::kCode;
  if (s == "explanation") return Technique::kExplanation;
  if (s == "impersonation") return Technique::kImpersonation;
  if (s == "restorying") return Technique::kRestorying;
  throw InvalidArgumentError("unknown technique: " + std::string(s));
}

const char* display_name(Technique technique) {
  switch (technique) {
    case Technique::kDefault: return "Default";
    case Technique::kCode: return "Code";
    case Technique::kExplanation: return "Explanation";
    case Technique::kImpersonation: return "Impersonation";
    case Technique::kRestorying: return "Re-storying";
  }
  throw InvalidArgumentError("unknown technique");
}

ContextPools ContextPools::defaults() {
  ContextPools pools;
  pools.code_languages = {"Python", "Java", "C++", "JavaScript", "Go"};
  pools.mathematicians = {"Bernhard Riemann", "Ada Lovelace", "Leonhard Euler",
                          "Carl Friedrich Gauss", "Emmy Noether"};
  pools.frames = {"manual", "poem", "theater play with two actors",
                  "children story", "news article"};
  return pools;
}

const std::vector<std::string>* ContextPools::pool_for(
    Technique technique) const {
  switch (technique) {
    case Technique::kCode: return &code_languages;
    case Technique::kImpersonation: return &mathematicians;
    case Technique::kRestorying: return &frames;
    case Technique::kDefault:
    case Technique::kExplanation: return nullptr;
  }
  throw InvalidArgumentError("unknown technique");
}

TemplateSet TemplateSet::defaults() {
  TemplateSet t;
  t.system_instruction =
      "Always end your reply with: [FINAL ANSWER] <answer>.";
  t.default_wrap = "{question}";
  t.code =
      "Write code in {detail} to solve the following problem: {question} "
      "Then simulate the execution of this code to provide an answer to this "
      "problem.";
  t.explanation =
      "Explain how you understand the following problem: {question} Then "
      "provide an answer to this problem.";
  t.impersonation =
      "Imagine you are the mathematician {detail}. As {detail} answer the "
      "following problem: {question}";
  t.restorying =
      "Write a {detail} describing how to solve the following problem: "
      "{question}";
  t.example_block =
      "You will now receive an example puzzle with an explanation how to "
      "solve it. Example puzzle: {example_question} Explanation: "
      "{explanation} This was the end of the example, use it to solve the "
      "following puzzle. {prompt}";
  return t;
}

namespace {

std::string read_template_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read template file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // Editors append a final newline; the templates themselves never end with
  // one, so strip exactly one.
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

}  // namespace

TemplateSet TemplateSet::load(const std::filesystem::path& dir) {
  TemplateSet t;
  t.system_instruction = read_template_file(dir / "system_instruction.txt");
  t.default_wrap = read_template_file(dir / "default.txt");
  t.code = read_template_file(dir / "code.txt");
  t.explanation = read_template_file(dir / "explanation.txt");
  t.impersonation = read_template_file(dir / "impersonation.txt");
  t.restorying = read_template_file(dir / "restorying.txt");
  t.example_block = read_template_file(dir / "example_block.txt");
  return t;
}

const std::string& TemplateSet::wrapper_for(Technique technique) const {
  switch (technique) {
    case Technique::kDefault: return default_wrap;
    case Technique::kCode: return code;
    case Technique::kExplanation: return explanation;
    case Technique::kImpersonation: return impersonation;
    case Technique::kRestorying: return restorying;
  }
  throw InvalidArgumentError("unknown technique");
}

RenderedPrompt wrap(const std::string& question_text, const ContextKind& kind,
                    const TemplateSet& templates) {
  if (question_text.empty()) {
    throw InvalidArgumentError("wrap: empty question text");
  }
  bool takes_detail = kind.technique != Technique::kDefault &&
                      kind.technique != Technique::kExplanation;
  if (takes_detail && kind.detail.empty()) {
    throw InvalidArgumentError(std::string("wrap: technique ") +
                               to_string(kind.technique) + " needs a detail");
  }
  if (!takes_detail && !kind.detail.empty()) {
    throw InvalidArgumentError(std::string("wrap: technique ") +
                               to_string(kind.technique) +
                               " takes no detail, got: " + kind.detail);
  }

  RenderedPrompt prompt;
  prompt.kind = kind;
  prompt.messages.push_back({"system", templates.system_instruction});
  prompt.messages.push_back(
      {"user", fill_template(templates.wrapper_for(kind.technique),
                             {{"question", question_text},
                              {"detail", kind.detail}})});
  return prompt;
}

RenderedPrompt prepend_example(const RenderedPrompt& prompt,
                               const WorkedExample& example,
                               const TemplateSet& templates) {
  if (prompt.example_attached) {
    throw InvalidArgumentError("prepend_example: example already attached");
  }
  RenderedPrompt out = prompt;
  for (Message& message : out.messages) {
    if (message.role != "user") continue;
    message.content =
        fill_template(templates.example_block,
                      {{"example_question", example.puzzle.question_text},
                       {"explanation", example.explanation_text},
                       {"prompt", message.content}});
  }
  out.example_attached = true;
  return out;
}

const char* to_string(ExperimentKind kind) {
  return kind == ExperimentKind::kArith ? "arith" : "puzzle";
}

ExperimentKind parse_experiment(std::string_view s) {
  if (s == "arith") return ExperimentKind::kArith;
  if (s == "puzzle") return ExperimentKind::kPuzzle;
  throw InvalidArgumentError("unknown experiment: " + std::string(s));
}

std::string Setting::id() const {
  std::string out = to_string(technique);
  if (difficulty) {
    out += ":";
    out += to_string(*difficulty);
    out += red_team ? ":rt" : ":base";
  } else if (with_example) {
    out += *with_example ? ":ex" : ":noex";
  }
  return out;
}

std::vector<Setting> enumerate_settings(
    ExperimentKind experiment, std::vector<Technique> techniques,
    const std::vector<Difficulty>& difficulties,
    const std::vector<bool>& example_flags) {
  std::vector<Setting> settings;
  if (experiment == ExperimentKind::kArith) {
    if (techniques.empty()) techniques = {Technique::kDefault};
    for (Technique technique : techniques) {
      for (Difficulty difficulty : difficulties) {
        if (technique == Technique::kDefault) {
          // The baseline is its own row; there is no red-team variant of it.
          settings.push_back({technique, false, difficulty, std::nullopt});
          continue;
        }
        settings.push_back({technique, true, difficulty, std::nullopt});
        settings.push_back({technique, false, difficulty, std::nullopt});
      }
    }
    return settings;
  }
  if (techniques.empty()) {
    techniques = {Technique::kDefault, Technique::kCode,
                  Technique::kExplanation, Technique::kImpersonation,
                  Technique::kRestorying};
  }
  for (Technique technique : techniques) {
    for (bool with_example : example_flags) {
      settings.push_back({technique, technique != Technique::kDefault,
                          std::nullopt, with_example});
    }
  }
  return settings;
}

}  // namespace mathprobe
