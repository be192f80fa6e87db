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

#ifndef BIOQA_EXTRACTIVE_HPP
#define BIOQA_EXTRACTIVE_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bioqa/dataset.hpp"
#include "bioqa/error.hpp"
#include "bioqa/metrics.hpp"

namespace bioqa {

/// One sentence drawn from the question's snippets. position is the global
/// index over all sentence-split snippets; source_snippet is the
/// order_index of the snippet it came from.
struct Candidate {
  std::string sentence;
  int position = 0;
  int source_snippet = 0;
};

/// Relevance of one candidate sentence to the question. Implementations
/// must be deterministic for fixed inputs; pool is the full candidate list
/// of the current question, for scorers that need corpus statistics.
class RelevanceScorer {
 public:
  virtual ~RelevanceScorer() = default;
  virtual double score(const std::string& question, const Candidate& candidate,
                       const std::vector<Candidate>& pool) const = 0;
};

struct ExtractConfig {
  int n = 3;
  double position_weight = 0.1;
};

inline std::vector<Candidate> candidates_from_snippets(const std::vector<Snippet>& snippets) {
  std::vector<Candidate> candidates;
  int position = 0;
  for (const Snippet& snippet : snippets) {
    for (std::string& sentence : split_sentences(snippet.text)) {
      candidates.push_back({std::move(sentence), position++, snippet.order_index});
    }
  }
  return candidates;
}

/// (1 - w) * cosine(tfidf(question), tfidf(sentence)) + w / (1 + position),
/// with tf-idf computed over the question's candidate pool and
/// idf(t) = ln(1 + N / df(t)). Question terms absent from the pool
/// vocabulary are dropped. Scores lie in [0, 1].
inline double lexical_score(const std::string& question, const Candidate& candidate,
                            double position_weight, const std::vector<Candidate>& pool) {
  if (position_weight < 0.0 || position_weight > 1.0) {
    throw Error("position_weight must lie in [0, 1]");
  }

  std::map<std::string, int> df;
  for (const Candidate& c : pool) {
    std::set<std::string> seen;
    for (const std::string& t : tokenize(c.sentence)) seen.insert(t);
    for (const std::string& t : seen) ++df[t];
  }
  const double pool_size = static_cast<double>(pool.size());

  auto weigh = [&](const std::vector<std::string>& tokens) {
    std::map<std::string, double> vec;
    for (const std::string& t : tokens) {
      auto it = df.find(t);
      if (it == df.end()) continue;
      vec[t] += std::log(1.0 + pool_size / static_cast<double>(it->second));
    }
    return vec;
  };

  const auto question_vec = weigh(tokenize(question));
  const auto sentence_vec = weigh(tokenize(candidate.sentence));

  double dot = 0.0, question_norm = 0.0, sentence_norm = 0.0;
  for (const auto& [term, weight] : question_vec) {
    question_norm += weight * weight;
    auto it = sentence_vec.find(term);
    if (it != sentence_vec.end()) dot += weight * it->second;
  }
  for (const auto& [term, weight] : sentence_vec) sentence_norm += weight * weight;

  double cosine = 0.0;
  if (question_norm > 0.0 && sentence_norm > 0.0) {
    cosine = dot / (std::sqrt(question_norm) * std::sqrt(sentence_norm));
  }
  return (1.0 - position_weight) * cosine +
         position_weight / (1.0 + static_cast<double>(candidate.position));
}

/// Default scorer standing in for a trained relevance classifier.
class LexicalScorer final : public RelevanceScorer {
 public:
  explicit LexicalScorer(double position_weight = 0.1) : position_weight_(position_weight) {}

  double score(const std::string& question, const Candidate& candidate,
               const std::vector<Candidate>& pool) const override {
    return lexical_score(question, candidate, position_weight_, pool);
  }

 private:
  double position_weight_;
};

/// Scores every candidate sentence, keeps the top n (ties broken by lower
/// position), and re-joins the chosen sentences in original order. The
/// output is verbatim input sentences, never paraphrased.
inline std::string summarize(const Question& question, const ExtractConfig& config,
                             const RelevanceScorer& scorer) {
  if (config.n < 1) throw Error("extract config requires n >= 1");
  const std::vector<Candidate> pool = candidates_from_snippets(question.snippets);
  if (pool.empty()) {
    throw Error("question " + question.id + " has no candidate sentences to summarize");
  }

  std::vector<double> scores(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    scores[i] = scorer.score(question.body, pool[i], pool);
  }

  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return pool[a].position < pool[b].position;
  });
  order.resize(std::min<std::size_t>(order.size(), static_cast<std::size_t>(config.n)));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pool[a].position < pool[b].position;
  });

  std::string extract;
  for (std::size_t idx : order) {
    if (!extract.empty()) extract += ' ';
    extract += pool[idx].sentence;
  }
  return extract;
}

}  // namespace bioqa

#endif  // BIOQA_EXTRACTIVE_HPP
