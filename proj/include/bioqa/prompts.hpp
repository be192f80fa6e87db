// Copyright 2026 The bioqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIOQA_PROMPTS_HPP
#define BIOQA_PROMPTS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bioqa/dataset.hpp"
#include "bioqa/error.hpp"

namespace bioqa {

/// The five prompt variants: plain question (zero/few shot), snippet list,
/// and extractive-summary context (zero/few shot).
enum class PromptStrategy {
  ZeroShotPlain,
  FewShotPlain,
  ZeroShotSnippets,
  ZeroShotExtract,
  FewShotExtract,
};

inline const char* strategy_slug(PromptStrategy s) {
  switch (s) {
    case PromptStrategy::ZeroShotPlain:
      return "zero-plain";
    case PromptStrategy::FewShotPlain:
      return "few-plain";
    case PromptStrategy::ZeroShotSnippets:
      return "zero-snippets";
    case PromptStrategy::ZeroShotExtract:
      return "zero-extract";
    case PromptStrategy::FewShotExtract:
      return "few-extract";
  }
  return "unknown";
}

inline PromptStrategy parse_strategy(std::string_view s) {
  if (s == "zero-plain") return PromptStrategy::ZeroShotPlain;
  if (s == "few-plain") return PromptStrategy::FewShotPlain;
  if (s == "zero-snippets") return PromptStrategy::ZeroShotSnippets;
  if (s == "zero-extract") return PromptStrategy::ZeroShotExtract;
  if (s == "few-extract") return PromptStrategy::FewShotExtract;
  throw Error("unknown prompt strategy \"" + std::string(s) +
              "\" (expected zero-plain, few-plain, zero-snippets, zero-extract or few-extract)");
}

inline bool is_few_shot(PromptStrategy s) {
  return s == PromptStrategy::FewShotPlain || s == PromptStrategy::FewShotExtract;
}

inline bool needs_extract(PromptStrategy s) {
  return s == PromptStrategy::ZeroShotExtract || s == PromptStrategy::FewShotExtract;
}

/// One worked example placed before the target question. The answer is the
/// first golden answer of the source training question; extract is set
/// only for the few-shot extract strategy.
struct FewShotSample {
  std::string question;
  QuestionType qtype = QuestionType::Summary;
  std::string answer;
  std::string extract;
};

struct Prompt {
  std::string text;
  PromptStrategy strategy = PromptStrategy::ZeroShotPlain;
  std::string question_id;
  int sample_count = 0;
  /// Snippets or samples removed from the end of their list to fit the
  /// character budget.
  int dropped = 0;
  std::vector<std::string> warnings;
};

inline constexpr int kDefaultPromptCharBudget = 12000;
inline constexpr int kDefaultFewShotCount = 10;

inline constexpr std::string_view kPlainPreamble =
    "Answer this biomedical question. Write the answer as the ideal answer given to a medical "
    "practitioner.";
inline constexpr std::string_view kSnippetListPreamble =
    "Answer the biomedical question as truthfully as possible using the provided list of "
    "snippets. Write the answer as the ideal answer given to a medical practitioner.";
inline constexpr std::string_view kProvidedTextPreamble =
    "Answer the biomedical question as truthfully as possible using the provided text. Write the "
    "answer as the ideal answer given to a medical practitioner.";

/// Returns the last n training questions (file order, oldest first) that
/// match the type filter and have at least one golden answer. With
/// require_snippets, questions without usable snippet text are also
/// skipped before counting. Fewer than n eligible questions is an error.
inline std::vector<const Question*> select_few_shot_questions(
    const QuestionSet& training, std::optional<QuestionType> qtype, int n,
    bool require_snippets = false) {
  if (n < 0) throw Error("few-shot sample count must be >= 0");
  std::vector<const Question*> eligible;
  for (const Question& q : training.questions) {
    if (qtype && q.qtype != *qtype) continue;
    if (q.ideal_answers.empty()) continue;
    if (require_snippets && q.snippets.empty()) continue;
    eligible.push_back(&q);
  }
  if (static_cast<int>(eligible.size()) < n) {
    throw Error("few-shot selection needs " + std::to_string(n) + " samples but only " +
                std::to_string(eligible.size()) + " training questions are eligible" +
                (qtype ? " for type " + std::string(to_string(*qtype)) : std::string{}));
  }
  return {eligible.end() - n, eligible.end()};
}

inline std::vector<FewShotSample> select_few_shot_samples(const QuestionSet& training,
                                                          std::optional<QuestionType> qtype,
                                                          int n) {
  std::vector<FewShotSample> samples;
  for (const Question* q : select_few_shot_questions(training, qtype, n)) {
    samples.push_back({q->body, q->qtype, q->ideal_answers.front(), {}});
  }
  return samples;
}

namespace detail {

inline void check_budget(Prompt& prompt, int char_budget) {
  if (static_cast<int>(prompt.text.size()) > char_budget) {
    prompt.warnings.push_back("prompt exceeds character budget (" +
                              std::to_string(prompt.text.size()) + " > " +
                              std::to_string(char_budget) + ")");
  }
}

}  // namespace detail

/// The question body is the whole prompt.
inline Prompt build_zero_shot_plain(const Question& q) {
  Prompt p;
  p.text = q.body;
  p.strategy = PromptStrategy::ZeroShotPlain;
  p.question_id = q.id;
  return p;
}

/// Preamble, then per-sample "Q:/Q type:/A:" blocks separated by blank
/// lines, then the target block ending in "A: ". Samples are dropped from
/// the end until the prompt fits the character budget.
inline Prompt build_few_shot_plain(const Question& q, const std::vector<FewShotSample>& samples,
                                   int char_budget = kDefaultPromptCharBudget) {
  for (const FewShotSample& s : samples) {
    if (!s.extract.empty()) {
      throw Error("few-shot plain prompt given a sample carrying an extract");
    }
  }
  auto render = [&](std::size_t kept) {
    std::string text(kPlainPreamble);
    text += "\n\n";
    for (std::size_t i = 0; i < kept; ++i) {
      const FewShotSample& s = samples[i];
      text += "Q: " + s.question + "\nQ type: " + to_string(s.qtype) + "\nA: " + s.answer + "\n\n";
    }
    text += "Q: " + q.body + "\nQ type: " + std::string(to_string(q.qtype)) + "\nA: ";
    return text;
  };

  Prompt p;
  p.strategy = PromptStrategy::FewShotPlain;
  p.question_id = q.id;
  std::size_t kept = samples.size();
  p.text = render(kept);
  while (static_cast<int>(p.text.size()) > char_budget && kept > 0) {
    --kept;
    ++p.dropped;
    p.text = render(kept);
  }
  p.sample_count = static_cast<int>(kept);
  detail::check_budget(p, char_budget);
  return p;
}

/// Preamble, "Snippets:" section with each snippet as a "- " bullet in
/// order_index order, then "Q:"/"A: ". An empty snippet list still builds
/// a prompt, with a warning recorded.
inline Prompt build_zero_shot_snippets(const Question& q,
                                       int char_budget = kDefaultPromptCharBudget) {
  auto render = [&](std::size_t kept) {
    std::string text(kSnippetListPreamble);
    text += "\n\nSnippets:\n\n";
    for (std::size_t i = 0; i < kept; ++i) {
      text += "- " + q.snippets[i].text + "\n\n";
    }
    text += "Q: " + q.body + "\nA: ";
    return text;
  };

  Prompt p;
  p.strategy = PromptStrategy::ZeroShotSnippets;
  p.question_id = q.id;
  if (q.snippets.empty()) {
    p.warnings.push_back("question " + q.id + " has no snippets");
  }
  std::size_t kept = q.snippets.size();
  p.text = render(kept);
  while (static_cast<int>(p.text.size()) > char_budget && kept > 0) {
    --kept;
    ++p.dropped;
    p.text = render(kept);
  }
  detail::check_budget(p, char_budget);
  return p;
}

/// Preamble, "Text:" section holding the extract, then "Q:"/"A: ".
inline Prompt build_zero_shot_extract(const Question& q, const std::string& extract) {
  if (trim(extract).empty()) {
    throw Error("zero-shot extract prompt for question " + q.id + " requires a non-empty extract");
  }
  Prompt p;
  p.strategy = PromptStrategy::ZeroShotExtract;
  p.question_id = q.id;
  p.text = std::string(kProvidedTextPreamble) + "\n\nText:\n\n" + extract + "\n\nQ: " + q.body +
           "\nA: ";
  return p;
}

/// Preamble, then per-sample "Text:/Q:/Q type:/A:" blocks, then the target
/// block. Samples must carry extracts and share the target's question
/// type.
inline Prompt build_few_shot_extract(const Question& q, const std::string& extract,
                                     const std::vector<FewShotSample>& samples,
                                     int char_budget = kDefaultPromptCharBudget) {
  if (trim(extract).empty()) {
    throw Error("few-shot extract prompt for question " + q.id + " requires a non-empty extract");
  }
  for (const FewShotSample& s : samples) {
    if (trim(s.extract).empty()) {
      throw Error("few-shot extract sample \"" + s.question + "\" is missing an extract");
    }
    if (s.qtype != q.qtype) {
      throw Error("few-shot extract sample type " + std::string(to_string(s.qtype)) +
                  " does not match target question type " + to_string(q.qtype));
    }
  }
  auto render = [&](std::size_t kept) {
    std::string text(kProvidedTextPreamble);
    text += "\n\n";
    for (std::size_t i = 0; i < kept; ++i) {
      const FewShotSample& s = samples[i];
      text += "Text: " + s.extract + "\nQ: " + s.question + "\nQ type: " + to_string(s.qtype) +
              "\nA: " + s.answer + "\n\n";
    }
    text += "Text: " + extract + "\nQ: " + q.body + "\nQ type: " +
            std::string(to_string(q.qtype)) + "\nA: ";
    return text;
  };

  Prompt p;
  p.strategy = PromptStrategy::FewShotExtract;
  p.question_id = q.id;
  std::size_t kept = samples.size();
  p.text = render(kept);
  while (static_cast<int>(p.text.size()) > char_budget && kept > 0) {
    --kept;
    ++p.dropped;
    p.text = render(kept);
  }
  p.sample_count = static_cast<int>(kept);
  detail::check_budget(p, char_budget);
  return p;
}

}  // namespace bioqa

#endif  // BIOQA_PROMPTS_HPP
