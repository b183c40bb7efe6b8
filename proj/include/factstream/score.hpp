// Copyright 2026 The Factstream Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FACTSTREAM_SCORE_HPP_
#define FACTSTREAM_SCORE_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "factstream/select.hpp"
#include "factstream/text.hpp"

namespace factstream {

// Reranker scores of one pooled document, one per query that retrieved it.
struct RelevanceRecord {
  std::string doc_id;
  std::map<std::string, double> per_query_scores;
};

// |matched queries| * mean per-query score. Throws Error on an empty record.
double Relevance(const RelevanceRecord& record);

using SparseVector = std::map<std::string, double, std::less<>>;

// Vocabulary and idf = ln(1 + N/df) fit on one event-day pool.
class TfidfModel {
 public:
  TfidfModel() = default;
  explicit TfidfModel(std::span<const std::string> pool_texts,
                      const text::Analyzer& analyzer = text::Analyzer());

  // Raw term counts times idf; out-of-vocabulary terms are dropped.
  SparseVector Vectorize(std::string_view text) const;
  std::size_t vocabulary_size() const { return idf_.size(); }
  double idf(std::string_view term) const;

 private:
  text::Analyzer analyzer_;
  std::map<std::string, double, std::less<>> idf_;
};

double Cosine(const SparseVector& a, const SparseVector& b);

// Cosine of the TF-IDF vectors, in [0, 1]; 0 if either vector is zero.
double TfidfRedundancy(std::string_view doc_i, std::string_view doc_j,
                       const TfidfModel& model);

struct SummaryItem {
  std::string doc_id;
  std::string text;
};

// Redundancy context of one event: documents scored so far today and the
// union of earlier days' summaries.
struct SummaryState {
  std::vector<SummaryItem> s_sel;
  std::vector<SummaryItem> s_past;
  TfidfModel tfidf_model;

  // Fits the TF-IDF model on today's pool and clears s_sel.
  void BeginDay(std::span<const std::string> pool_texts);
};

struct MmrParams {
  double lambda = 0.8;

  void Validate() const;
};

struct MmrCandidate {
  std::string doc_id;
  std::string text;
  double relevance = 0.0;
};

struct ScoredDoc {
  std::string doc_id;
  double score = 0.0;
};

// Relaxed MMR over every candidate: repeatedly pick the candidate with the
// highest lambda * Rel - (1 - lambda) * max redundancy against s_sel and
// s_past (0 when both are empty), ties by doc_id. Picked documents join
// s_sel. Returns candidates in pick order with their pick-time scores.
std::vector<ScoredDoc> MmrRank(std::span<const MmrCandidate> candidates,
                               SummaryState* state, const MmrParams& params);

// Adds the day's summary to s_past (set semantics by doc_id) and resets
// s_sel.
void UpdatePast(SummaryState* state, std::span<const SummaryItem> summary);

}  // namespace factstream

#endif  // FACTSTREAM_SCORE_HPP_
