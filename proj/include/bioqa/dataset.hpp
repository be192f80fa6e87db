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

#ifndef BIOQA_DATASET_HPP
#define BIOQA_DATASET_HPP

#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "bioqa/error.hpp"

namespace bioqa {

/// The four BioASQ Task B question categories.
enum class QuestionType { Yesno, Factoid, List, Summary };

inline const char* to_string(QuestionType t) {
  switch (t) {
    case QuestionType::Yesno:
      return "yesno";
    case QuestionType::Factoid:
      return "factoid";
    case QuestionType::List:
      return "list";
    case QuestionType::Summary:
      return "summary";
  }
  return "unknown";
}

inline QuestionType parse_question_type(std::string_view s) {
  if (s == "yesno") return QuestionType::Yesno;
  if (s == "factoid") return QuestionType::Factoid;
  if (s == "list") return QuestionType::List;
  if (s == "summary") return QuestionType::Summary;
  throw Error("unknown question type \"" + std::string(s) +
              "\" (expected yesno, factoid, list or summary)");
}

/// One curated relevant text fragment attached to a question.
struct Snippet {
  std::string text;
  std::string document;
  int order_index = 0;
};

struct Question {
  std::string id;
  std::string body;
  QuestionType qtype = QuestionType::Summary;
  std::vector<Snippet> snippets;
  std::vector<std::string> ideal_answers;
};

/// An ordered collection of questions. Order is the file order of the
/// source JSON; few-shot sample selection depends on it.
struct QuestionSet {
  std::vector<Question> questions;
  std::string label;
};

struct TypeCounts {
  int yesno = 0;
  int factoid = 0;
  int list = 0;
  int summary = 0;
  int total = 0;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

namespace detail {

// Abbreviations that end in '.' but do not terminate a sentence. A match
// counts only when the character before it is not alphanumeric, so "et al."
// is guarded while "renal." is not.
inline bool ends_with_abbreviation(std::string_view text) {
  static constexpr std::array<std::string_view, 18> kAbbreviations = {
      "e.g.", "i.e.", "etc.", "vs.",  "cf.",  "ca.",    "approx.", "al.", "Fig.",
      "Figs.", "fig.", "No.",  "Dr.",  "Mr.",  "Mrs.",   "Ms.",     "Prof.", "St."};
  for (std::string_view abbr : kAbbreviations) {
    if (text.size() < abbr.size() || !text.ends_with(abbr)) continue;
    if (text.size() == abbr.size()) return true;
    char before = text[text.size() - abbr.size() - 1];
    if (!std::isalnum(static_cast<unsigned char>(before))) return true;
  }
  return false;
}

}  // namespace detail

/// Rule-based sentence splitter. A boundary is a run of sentence-final
/// punctuation (., ?, !) followed by whitespace and an uppercase letter or
/// digit, unless the text so far ends in a guarded abbreviation. Sentences
/// are returned trimmed; empty input yields an empty list.
inline std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  const std::size_t n = text.size();
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view sentence = trim(text.substr(start, end - start));
    if (!sentence.empty()) sentences.emplace_back(sentence);
    start = end;
  };
  std::size_t i = 0;
  while (i < n) {
    char c = text[i];
    if (c != '.' && c != '?' && c != '!') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n && (text[j] == '.' || text[j] == '?' || text[j] == '!')) ++j;
    std::size_t k = j;
    while (k < n && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    bool boundary = k > j && k < n &&
                    (std::isupper(static_cast<unsigned char>(text[k])) ||
                     std::isdigit(static_cast<unsigned char>(text[k])));
    if (boundary && text[j - 1] == '.' && detail::ends_with_abbreviation(text.substr(0, j))) {
      boundary = false;
    }
    if (boundary) {
      flush(j);
    }
    i = j;
  }
  flush(n);
  return sentences;
}

/// Loads a BioASQ Task B JSON file. "ideal_answer" may be a string or an
/// array of strings and is normalized to an array; "exact_answer" fields
/// are ignored; snippets whose text trims to empty are dropped.
inline QuestionSet load_question_set(const std::filesystem::path& path, std::string label) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open question file: " + path.string());

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("malformed JSON in " + path.string() + " near byte " + std::to_string(e.byte) +
                ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("questions") || !doc["questions"].is_array()) {
    throw Error(path.string() + ": expected a top-level \"questions\" array");
  }

  QuestionSet set;
  set.label = std::move(label);
  std::unordered_set<std::string> seen_ids;
  std::size_t index = 0;
  for (const auto& jq : doc["questions"]) {
    const std::string where = "question #" + std::to_string(index) + " in " + path.string();
    ++index;
    if (!jq.is_object()) throw Error(where + ": not an object");

    Question q;
    if (!jq.contains("id") || !jq["id"].is_string()) throw Error(where + ": missing \"id\"");
    q.id = jq["id"].get<std::string>();
    if (!seen_ids.insert(q.id).second) throw Error("duplicate question id \"" + q.id + "\"");

    if (!jq.contains("body") || !jq["body"].is_string()) {
      throw Error("question \"" + q.id + "\": missing \"body\"");
    }
    q.body = jq["body"].get<std::string>();
    if (trim(q.body).empty()) throw Error("question \"" + q.id + "\": empty \"body\"");

    if (!jq.contains("type") || !jq["type"].is_string()) {
      throw Error("question \"" + q.id + "\": missing \"type\"");
    }
    try {
      q.qtype = parse_question_type(jq["type"].get<std::string>());
    } catch (const Error& e) {
      throw Error("question \"" + q.id + "\": " + e.what());
    }

    if (jq.contains("snippets")) {
      if (!jq["snippets"].is_array()) throw Error("question \"" + q.id + "\": \"snippets\" is not an array");
      for (const auto& js : jq["snippets"]) {
        if (!js.is_object() || !js.contains("text") || !js["text"].is_string()) {
          throw Error("question \"" + q.id + "\": snippet without \"text\"");
        }
        Snippet s;
        s.text = js["text"].get<std::string>();
        if (trim(s.text).empty()) continue;
        s.document = js.value("document", std::string{});
        s.order_index = static_cast<int>(q.snippets.size());
        q.snippets.push_back(std::move(s));
      }
    }

    if (jq.contains("ideal_answer") && !jq["ideal_answer"].is_null()) {
      const auto& ja = jq["ideal_answer"];
      if (ja.is_string()) {
        q.ideal_answers.push_back(ja.get<std::string>());
      } else if (ja.is_array()) {
        for (const auto& item : ja) {
          if (!item.is_string()) {
            throw Error("question \"" + q.id + "\": \"ideal_answer\" array holds a non-string");
          }
          q.ideal_answers.push_back(item.get<std::string>());
        }
      } else {
        throw Error("question \"" + q.id + "\": \"ideal_answer\" must be a string or array");
      }
    }

    set.questions.push_back(std::move(q));
  }
  return set;
}

/// Writes a set back out in the BioASQ JSON layout; load(save(set)) is
/// field-for-field equal to the original.
inline void save_question_set(const QuestionSet& set, const std::filesystem::path& path) {
  nlohmann::json questions = nlohmann::json::array();
  for (const Question& q : set.questions) {
    nlohmann::json jq;
    jq["id"] = q.id;
    jq["body"] = q.body;
    jq["type"] = to_string(q.qtype);
    nlohmann::json snippets = nlohmann::json::array();
    for (const Snippet& s : q.snippets) {
      snippets.push_back({{"text", s.text}, {"document", s.document}});
    }
    jq["snippets"] = std::move(snippets);
    jq["ideal_answer"] = q.ideal_answers;
    questions.push_back(std::move(jq));
  }
  nlohmann::json doc;
  doc["questions"] = std::move(questions);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write question file: " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw Error("failed writing question file: " + path.string());
}

inline TypeCounts statistics(const QuestionSet& set) {
  TypeCounts counts;
  for (const Question& q : set.questions) {
    switch (q.qtype) {
      case QuestionType::Yesno:
        ++counts.yesno;
        break;
      case QuestionType::Factoid:
        ++counts.factoid;
        break;
      case QuestionType::List:
        ++counts.list;
        break;
      case QuestionType::Summary:
        ++counts.summary;
        break;
    }
    ++counts.total;
  }
  return counts;
}

}  // namespace bioqa

#endif  // BIOQA_DATASET_HPP
