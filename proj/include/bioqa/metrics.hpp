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

#ifndef BIOQA_METRICS_HPP
#define BIOQA_METRICS_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bioqa/dataset.hpp"
#include "bioqa/error.hpp"

namespace bioqa {

namespace detail {

// Porter stemming algorithm (Porter 1980), operating on a lowercase
// ASCII-alphabetic word.
class PorterStemmer {
 public:
  static std::string stem(std::string word) {
    if (word.size() <= 2) return word;
    PorterStemmer p(std::move(word));
    p.step1ab();
    p.step1c();
    p.step2();
    p.step3();
    p.step4();
    p.step5();
    p.b_.resize(static_cast<std::size_t>(p.k_ + 1));
    return std::move(p.b_);
  }

 private:
  explicit PorterStemmer(std::string w) : b_(std::move(w)), k_(static_cast<int>(b_.size()) - 1) {}

  bool cons(int i) const {
    switch (b_[static_cast<std::size_t>(i)]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_cons(int i) const {
    if (i < 1) return false;
    if (b_[static_cast<std::size_t>(i)] != b_[static_cast<std::size_t>(i - 1)]) return false;
    return cons(i);
  }

  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char ch = b_[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (b_.compare(static_cast<std::size_t>(k_ + 1 - len), static_cast<std::size_t>(len), s) != 0) {
      return false;
    }
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(static_cast<std::size_t>(j_ + 1), static_cast<std::size_t>(k_ - j_), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void replace_if_m(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  void step1ab() {
    if (b_[static_cast<std::size_t>(k_)] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (b_[static_cast<std::size_t>(k_ - 1)] != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(k_)) {
        --k_;
        char ch = b_[static_cast<std::size_t>(k_)];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (m() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[static_cast<std::size_t>(k_)] = 'i';
  }

  void step2() {
    if (k_ < 1) return;
    switch (b_[static_cast<std::size_t>(k_ - 1)]) {
      case 'a':
        if (ends("ational")) { replace_if_m("ate"); break; }
        if (ends("tional")) { replace_if_m("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { replace_if_m("ence"); break; }
        if (ends("anci")) { replace_if_m("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { replace_if_m("ize"); break; }
        break;
      case 'l':
        if (ends("abli")) { replace_if_m("able"); break; }
        if (ends("alli")) { replace_if_m("al"); break; }
        if (ends("entli")) { replace_if_m("ent"); break; }
        if (ends("eli")) { replace_if_m("e"); break; }
        if (ends("ousli")) { replace_if_m("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { replace_if_m("ize"); break; }
        if (ends("ation")) { replace_if_m("ate"); break; }
        if (ends("ator")) { replace_if_m("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { replace_if_m("al"); break; }
        if (ends("iveness")) { replace_if_m("ive"); break; }
        if (ends("fulness")) { replace_if_m("ful"); break; }
        if (ends("ousness")) { replace_if_m("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { replace_if_m("al"); break; }
        if (ends("iviti")) { replace_if_m("ive"); break; }
        if (ends("biliti")) { replace_if_m("ble"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (b_[static_cast<std::size_t>(k_)]) {
      case 'e':
        if (ends("icate")) { replace_if_m("ic"); break; }
        if (ends("ative")) { replace_if_m(""); break; }
        if (ends("alize")) { replace_if_m("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { replace_if_m("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { replace_if_m("ic"); break; }
        if (ends("ful")) { replace_if_m(""); break; }
        break;
      case 's':
        if (ends("ness")) { replace_if_m(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 1) return;
    switch (b_[static_cast<std::size_t>(k_ - 1)]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j_ >= 0 &&
            (b_[static_cast<std::size_t>(j_)] == 's' || b_[static_cast<std::size_t>(j_)] == 't')) {
          break;
        }
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (m() > 1) k_ = j_;
  }

  void step5() {
    j_ = k_;
    if (b_[static_cast<std::size_t>(k_)] == 'e') {
      int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (b_[static_cast<std::size_t>(k_)] == 'l' && double_cons(k_) && m() > 1) --k_;
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

inline bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

inline bool is_ascii_alpha_lower(char c) { return c >= 'a' && c <= 'z'; }

// Locale-independent fixed-point formatting.
inline std::string format_fixed(double value, int precision) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, precision);
  if (ec != std::errc{}) throw Error("number formatting failed");
  return std::string(buf.data(), ptr);
}

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// Stems one lowercase word; tokens containing non-alphabetic characters
/// are returned unchanged.
inline std::string porter_stem(std::string word) {
  for (char c : word) {
    if (!detail::is_ascii_alpha_lower(c)) return word;
  }
  return detail::PorterStemmer::stem(std::move(word));
}

/// Lowercases and splits on every maximal run of non-alphanumeric
/// characters. Digits are kept; "GLP-1R/GIPR" becomes [glp, 1r, gipr].
inline std::vector<std::string> tokenize(std::string_view text, bool stem = false) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (detail::is_ascii_alnum(c)) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      current += c;
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  if (stem) {
    for (std::string& t : tokens) t = porter_stem(std::move(t));
  }
  return tokens;
}

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct RougeOptions {
  int d_skip = 4;
  bool stem = false;
};

using TokenPair = std::pair<std::string, std::string>;

/// All ordered pairs (t_i, t_j) with i < j and at most d_skip intervening
/// tokens, with multiplicity. d_skip = 0 yields the contiguous bigrams.
inline std::map<TokenPair, int> skip_bigrams(const std::vector<std::string>& tokens,
                                             int d_skip = 4) {
  if (d_skip < 0) throw Error("d_skip must be >= 0");
  std::map<TokenPair, int> pairs;
  const std::size_t n = tokens.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t last = std::min(n, i + static_cast<std::size_t>(d_skip) + 2);
    for (std::size_t j = i + 1; j < last; ++j) {
      ++pairs[{tokens[i], tokens[j]}];
    }
  }
  return pairs;
}

namespace detail {

inline std::map<std::string, int> unigram_counts(const std::vector<std::string>& tokens) {
  std::map<std::string, int> counts;
  for (const std::string& t : tokens) ++counts[t];
  return counts;
}

template <typename Key>
std::size_t clipped_matches(const std::map<Key, int>& candidate, const std::map<Key, int>& reference) {
  std::size_t matches = 0;
  for (const auto& [key, count] : candidate) {
    auto it = reference.find(key);
    if (it != reference.end()) matches += static_cast<std::size_t>(std::min(count, it->second));
  }
  return matches;
}

template <typename Key>
std::size_t total_count(const std::map<Key, int>& counts) {
  std::size_t total = 0;
  for (const auto& [key, count] : counts) total += static_cast<std::size_t>(count);
  return total;
}

}  // namespace detail

/// ROUGE-SU over pre-tokenized sequences: match units are the union of
/// unigrams and skip-bigrams, each counted with clipped multiset
/// intersection. Empty candidate or reference scores zero.
inline RougeScore rouge_su_from_tokens(const std::vector<std::string>& candidate,
                                       const std::vector<std::string>& reference,
                                       int d_skip = 4) {
  const auto cand_uni = detail::unigram_counts(candidate);
  const auto ref_uni = detail::unigram_counts(reference);
  const auto cand_bi = skip_bigrams(candidate, d_skip);
  const auto ref_bi = skip_bigrams(reference, d_skip);

  const std::size_t cand_units = candidate.size() + detail::total_count(cand_bi);
  const std::size_t ref_units = reference.size() + detail::total_count(ref_bi);
  if (cand_units == 0 || ref_units == 0) return {};

  const std::size_t matches =
      detail::clipped_matches(cand_uni, ref_uni) + detail::clipped_matches(cand_bi, ref_bi);

  RougeScore score;
  score.precision = static_cast<double>(matches) / static_cast<double>(cand_units);
  score.recall = static_cast<double>(matches) / static_cast<double>(ref_units);
  if (score.precision + score.recall > 0.0) {
    score.f1 = 2.0 * score.precision * score.recall / (score.precision + score.recall);
  }
  return score;
}

inline RougeScore rouge_su4(std::string_view candidate, std::string_view reference,
                            const RougeOptions& options = {}) {
  return rouge_su_from_tokens(tokenize(candidate, options.stem),
                              tokenize(reference, options.stem), options.d_skip);
}

/// Scores against every reference and returns the one with maximal F1;
/// ties go to the earliest reference.
inline RougeScore rouge_su4_multi(std::string_view candidate,
                                  const std::vector<std::string>& references,
                                  const RougeOptions& options = {}) {
  if (references.empty()) throw Error("rouge_su4_multi requires at least one reference");
  const auto cand_tokens = tokenize(candidate, options.stem);
  RougeScore best;
  bool first = true;
  for (const std::string& ref : references) {
    RougeScore s = rouge_su_from_tokens(cand_tokens, tokenize(ref, options.stem), options.d_skip);
    if (first || s.f1 > best.f1) {
      best = s;
      first = false;
    }
  }
  return best;
}

struct QuestionScore {
  std::string question_id;
  QuestionType qtype = QuestionType::Summary;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool answered = false;
};

struct EvalReport {
  std::vector<QuestionScore> scores;
  double mean_f1 = 0.0;
};

/// Scores a run against a golden set. Every answered id must exist in the
/// gold set and carry at least one golden answer. Unanswered gold
/// questions are reported and contribute zero to the mean, whose
/// denominator is the full gold question count.
inline EvalReport evaluate_run(const std::map<std::string, std::string>& answers,
                               const QuestionSet& gold, const RougeOptions& options = {}) {
  std::map<std::string, const Question*> by_id;
  for (const Question& q : gold.questions) by_id.emplace(q.id, &q);

  std::string bad_ids;
  for (const auto& [id, text] : answers) {
    auto it = by_id.find(id);
    if (it == by_id.end() || it->second->ideal_answers.empty()) {
      if (!bad_ids.empty()) bad_ids += ", ";
      bad_ids += id;
    }
  }
  if (!bad_ids.empty()) {
    throw Error("answers reference questions absent from gold or lacking golden answers: " +
                bad_ids);
  }

  EvalReport report;
  double sum_f1 = 0.0;
  for (const Question& q : gold.questions) {
    QuestionScore qs;
    qs.question_id = q.id;
    qs.qtype = q.qtype;
    auto it = answers.find(q.id);
    if (it != answers.end()) {
      RougeScore s = rouge_su4_multi(it->second, q.ideal_answers, options);
      qs.precision = s.precision;
      qs.recall = s.recall;
      qs.f1 = s.f1;
      qs.answered = true;
      sum_f1 += s.f1;
    }
    report.scores.push_back(std::move(qs));
  }
  report.mean_f1 =
      gold.questions.empty() ? 0.0 : sum_f1 / static_cast<double>(gold.questions.size());
  return report;
}

/// CSV with one row per question and a footer row holding the column means.
inline std::string eval_report_csv(const EvalReport& report) {
  std::string out = "question_id,qtype,precision,recall,f1\n";
  double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
  for (const QuestionScore& qs : report.scores) {
    out += detail::csv_escape(qs.question_id);
    out += ',';
    out += to_string(qs.qtype);
    out += ',';
    out += detail::format_fixed(qs.precision, 9);
    out += ',';
    out += detail::format_fixed(qs.recall, 9);
    out += ',';
    out += detail::format_fixed(qs.f1, 9);
    out += '\n';
    sum_p += qs.precision;
    sum_r += qs.recall;
    sum_f += qs.f1;
  }
  const double n = report.scores.empty() ? 1.0 : static_cast<double>(report.scores.size());
  out += "mean,,";
  out += detail::format_fixed(sum_p / n, 9);
  out += ',';
  out += detail::format_fixed(sum_r / n, 9);
  out += ',';
  out += detail::format_fixed(sum_f / n, 9);
  out += '\n';
  return out;
}

}  // namespace bioqa

#endif  // BIOQA_METRICS_HPP
