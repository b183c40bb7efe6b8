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

#include "factstream/retrieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace factstream {

InvertedIndex InvertedIndex::Build(std::span<const Document> docs,
                                   const text::Analyzer& analyzer) {
  if (docs.empty()) throw Error("empty corpus");
  InvertedIndex index;
  index.analyzer_ = analyzer;
  std::uint64_t total_length = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto tokens = analyzer.Analyze(docs[i].text);
    std::map<std::string, std::uint32_t> counts;
    for (const auto& t : tokens) ++counts[t];
    for (const auto& [term, tf] : counts) {
      auto& entry = index.postings_[term];
      entry.postings.push_back({static_cast<std::uint32_t>(i), tf});
      entry.collection_tf += tf;
    }
    index.doc_terms_.push_back(std::move(counts));
    index.doc_lengths_.push_back(static_cast<std::uint32_t>(tokens.size()));
    index.doc_ids_.push_back(docs[i].doc_id);
    index.doc_texts_.push_back(docs[i].text);
    index.doc_timestamps_.push_back(docs[i].timestamp);
    total_length += tokens.size();
  }
  index.avg_doc_length_ =
      static_cast<double>(total_length) / static_cast<double>(docs.size());
  return index;
}

std::span<const Posting> InvertedIndex::postings(std::string_view term) const {
  auto it = postings_.find(term);
  if (it == postings_.end()) return {};
  return it->second.postings;
}

std::uint64_t InvertedIndex::collection_tf(std::string_view term) const {
  auto it = postings_.find(term);
  return it == postings_.end() ? 0 : it->second.collection_tf;
}

void RetrievalParams::Validate() const {
  if (!(k1 >= 0.0)) throw Error("retrieval: k1 must be >= 0");
  if (!(b >= 0.0 && b <= 1.0)) throw Error("retrieval: b must be in [0, 1]");
  if (k_stage1 <= 0) throw Error("retrieval: k_stage1 must be > 0");
  if (fb_docs < 1) throw Error("retrieval: fb_docs must be >= 1");
  if (fb_terms < 1) throw Error("retrieval: fb_terms must be >= 1");
}

RetrievalParams MakeRetrievalParams(double k1, double b, int k_stage1,
                                    int fb_docs, int fb_terms, bool expand) {
  RetrievalParams params{k1, b, k_stage1, fb_docs, fb_terms, expand};
  params.Validate();
  return params;
}

void Cluster::Sort() {
  std::sort(entries.begin(), entries.end(),
            [](const ClusterEntry& a, const ClusterEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.doc_id < b.doc_id;
            });
}

double Bm25Idf(std::size_t num_docs, std::size_t doc_freq) {
  const double n = static_cast<double>(doc_freq);
  return std::log((static_cast<double>(num_docs) - n + 0.5) / (n + 0.5) + 1.0);
}

double Bm25Score(const InvertedIndex& index, const WeightedTerms& terms,
                 std::size_t doc, const RetrievalParams& params) {
  const auto& doc_terms = index.doc_terms(doc);
  const double norm =
      index.avg_doc_length() > 0.0
          ? 1.0 - params.b +
                params.b * index.doc_length(doc) / index.avg_doc_length()
          : 1.0;
  double score = 0.0;
  for (const auto& [term, weight] : terms) {
    auto it = doc_terms.find(term);
    if (it == doc_terms.end()) continue;
    const double tf = it->second;
    score += weight * Bm25Idf(index.num_docs(), index.doc_freq(term)) * tf *
             (params.k1 + 1.0) / (tf + params.k1 * norm);
  }
  return score;
}

WeightedTerms CountTerms(const std::vector<std::string>& tokens) {
  WeightedTerms terms;
  for (const auto& t : tokens) terms[t] += 1.0;
  return terms;
}

WeightedTerms QueryTerms(const Query& query, const text::Analyzer& analyzer) {
  std::string joined = query.text;
  for (const auto& term : query.indicative_terms) {
    joined.push_back(' ');
    joined.append(term);
  }
  return CountTerms(analyzer.Analyze(joined));
}

Cluster RankAll(const InvertedIndex& index, const WeightedTerms& terms,
                const RetrievalParams& params, std::string query_id) {
  std::vector<bool> matched(index.num_docs(), false);
  for (const auto& [term, weight] : terms) {
    if (weight <= 0.0) continue;
    for (const auto& p : index.postings(term)) matched[p.doc] = true;
  }
  Cluster cluster;
  cluster.query_id = std::move(query_id);
  for (std::size_t doc = 0; doc < matched.size(); ++doc) {
    if (!matched[doc]) continue;
    cluster.entries.push_back(
        {index.doc_id(doc), Bm25Score(index, terms, doc, params)});
  }
  cluster.Sort();
  return cluster;
}

double Bo1TermWeight(double feedback_tf, std::uint64_t collection_tf,
                     std::size_t num_docs) {
  const double pn =
      static_cast<double>(collection_tf) / static_cast<double>(num_docs);
  return feedback_tf * std::log2((1.0 + pn) / pn) + std::log2(1.0 + pn);
}

WeightedTerms Bo1Expand(const InvertedIndex& index,
                        const WeightedTerms& original,
                        const Cluster& first_pass,
                        const RetrievalParams& params) {
  params.Validate();
  if (first_pass.entries.empty()) {
    throw Error("Bo1 expansion needs a nonempty first pass");
  }
  std::unordered_map<std::string, std::size_t> ordinal;
  for (std::size_t d = 0; d < index.num_docs(); ++d) {
    ordinal.emplace(index.doc_id(d), d);
  }

  std::map<std::string, double> feedback_tf;
  const std::size_t fb = std::min<std::size_t>(params.fb_docs,
                                               first_pass.entries.size());
  for (std::size_t i = 0; i < fb; ++i) {
    auto it = ordinal.find(first_pass.entries[i].doc_id);
    if (it == ordinal.end()) {
      throw Error("Bo1: first-pass doc " + first_pass.entries[i].doc_id +
                  " is not in the index");
    }
    for (const auto& [term, tf] : index.doc_terms(it->second)) {
      feedback_tf[term] += tf;
    }
  }

  std::vector<std::pair<std::string, double>> candidates;
  candidates.reserve(feedback_tf.size());
  for (const auto& [term, tf] : feedback_tf) {
    candidates.emplace_back(
        term, Bo1TermWeight(tf, index.collection_tf(term), index.num_docs()));
  }
  // Best first; ties by term so the cut is deterministic.
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  if (candidates.size() > static_cast<std::size_t>(params.fb_terms)) {
    candidates.resize(params.fb_terms);
  }

  double max_q = 0.0;
  for (const auto& [term, weight] : original) max_q = std::max(max_q, weight);
  WeightedTerms expanded;
  if (max_q > 0.0) {
    for (const auto& [term, weight] : original) {
      expanded[term] = weight / max_q;
    }
  }
  if (!candidates.empty()) {
    const double w_max = candidates.front().second;
    for (const auto& [term, w] : candidates) expanded[term] += w / w_max;
  }
  return expanded;
}

Cluster DropDuplicates(const InvertedIndex& index, const Cluster& cluster) {
  std::unordered_map<std::string, std::size_t> ordinal;
  for (std::size_t d = 0; d < index.num_docs(); ++d) {
    ordinal.emplace(index.doc_id(d), d);
  }
  auto timestamp = [&](const std::string& id) {
    return index.doc_timestamp(ordinal.at(id));
  };

  std::vector<ClusterEntry> order = cluster.entries;
  std::sort(order.begin(), order.end(),
            [&](const ClusterEntry& a, const ClusterEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              const auto ta = timestamp(a.doc_id);
              const auto tb = timestamp(b.doc_id);
              if (ta != tb) return ta < tb;
              return a.doc_id < b.doc_id;
            });
  std::unordered_map<std::string_view, bool> seen_text;
  Cluster out;
  out.query_id = cluster.query_id;
  for (const auto& entry : order) {
    const auto& text = index.doc_text(ordinal.at(entry.doc_id));
    if (seen_text.emplace(text, true).second) out.entries.push_back(entry);
  }
  out.Sort();
  return out;
}

Cluster RetrieveCandidates(const InvertedIndex& index, const Query& query,
                           const RetrievalParams& params) {
  params.Validate();
  const WeightedTerms original = QueryTerms(query, index.analyzer());
  Cluster ranked = RankAll(index, original, params, query.query_id);
  if (params.expand && !ranked.entries.empty()) {
    ranked = RankAll(index, Bo1Expand(index, original, ranked, params), params,
                     query.query_id);
  }
  Cluster out = DropDuplicates(index, ranked);
  if (out.entries.size() > static_cast<std::size_t>(params.k_stage1)) {
    out.entries.resize(params.k_stage1);
  }
  return out;
}

}  // namespace factstream
