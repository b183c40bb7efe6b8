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

#include "factstream/score.hpp"

#include <algorithm>
#include <cmath>

namespace factstream {

double Relevance(const RelevanceRecord& record) {
  if (record.per_query_scores.empty()) {
    throw Error("relevance of " + record.doc_id + ": no matched queries");
  }
  double sum = 0.0;
  for (const auto& [query, score] : record.per_query_scores) sum += score;
  const double n = static_cast<double>(record.per_query_scores.size());
  return n * (sum / n);
}

TfidfModel::TfidfModel(std::span<const std::string> pool_texts,
                       const text::Analyzer& analyzer)
    : analyzer_(analyzer) {
  std::map<std::string, std::size_t, std::less<>> df;
  for (const auto& t : pool_texts) {
    auto tokens = analyzer_.Analyze(t);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    for (auto& token : tokens) ++df[std::move(token)];
  }
  const double n = static_cast<double>(pool_texts.size());
  for (const auto& [term, count] : df) {
    idf_.emplace(term, std::log(1.0 + n / static_cast<double>(count)));
  }
}

double TfidfModel::idf(std::string_view term) const {
  auto it = idf_.find(term);
  return it == idf_.end() ? 0.0 : it->second;
}

SparseVector TfidfModel::Vectorize(std::string_view text) const {
  SparseVector v;
  for (const auto& token : analyzer_.Analyze(text)) {
    auto it = idf_.find(token);
    if (it != idf_.end()) v[token] += 1.0;
  }
  for (auto& [term, tf] : v) tf *= idf_.find(term)->second;
  return v;
}

double Cosine(const SparseVector& a, const SparseVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  if (a == b) return 1.0;
  double dot = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  double na = 0.0;
  double nb = 0.0;
  for (const auto& [t, x] : a) na += x * x;
  for (const auto& [t, x] : b) nb += x * x;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

double TfidfRedundancy(std::string_view doc_i, std::string_view doc_j,
                       const TfidfModel& model) {
  return Cosine(model.Vectorize(doc_i), model.Vectorize(doc_j));
}

void SummaryState::BeginDay(std::span<const std::string> pool_texts) {
  tfidf_model = TfidfModel(pool_texts);
  s_sel.clear();
}

void MmrParams::Validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error("MMR: lambda must be in [0, 1]");
  }
}

std::vector<ScoredDoc> MmrRank(std::span<const MmrCandidate> candidates,
                               SummaryState* state, const MmrParams& params) {
  params.Validate();
  const auto& model = state->tfidf_model;
  std::vector<SparseVector> vectors;
  vectors.reserve(candidates.size());
  for (const auto& c : candidates) vectors.push_back(model.Vectorize(c.text));

  // Running max redundancy of each candidate against s_sel and s_past.
  std::vector<double> max_red(candidates.size(), 0.0);
  auto absorb = [&](const SummaryItem& item) {
    const auto v = model.Vectorize(item.text);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].doc_id == item.doc_id) continue;
      max_red[i] = std::max(max_red[i], Cosine(vectors[i], v));
    }
  };
  for (const auto& item : state->s_past) absorb(item);
  for (const auto& item : state->s_sel) absorb(item);

  std::vector<bool> picked(candidates.size(), false);
  std::vector<ScoredDoc> ranked;
  ranked.reserve(candidates.size());
  for (std::size_t step = 0; step < candidates.size(); ++step) {
    std::size_t best = candidates.size();
    double best_score = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (picked[i]) continue;
      const double score = params.lambda * candidates[i].relevance -
                           (1.0 - params.lambda) * max_red[i];
      if (best == candidates.size() || score > best_score ||
          (score == best_score &&
           candidates[i].doc_id < candidates[best].doc_id)) {
        best = i;
        best_score = score;
      }
    }
    picked[best] = true;
    ranked.push_back({candidates[best].doc_id, best_score});
    state->s_sel.push_back({candidates[best].doc_id, candidates[best].text});
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!picked[i]) {
        max_red[i] = std::max(max_red[i], Cosine(vectors[i], vectors[best]));
      }
    }
  }
  return ranked;
}

void UpdatePast(SummaryState* state, std::span<const SummaryItem> summary) {
  for (const auto& item : summary) {
    const bool known = std::any_of(
        state->s_past.begin(), state->s_past.end(),
        [&](const SummaryItem& p) { return p.doc_id == item.doc_id; });
    if (!known) state->s_past.push_back(item);
  }
  state->s_sel.clear();
}

}  // namespace factstream
