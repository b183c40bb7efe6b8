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

#ifndef FACTSTREAM_RETRIEVE_HPP_
#define FACTSTREAM_RETRIEVE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "factstream/corpus.hpp"
#include "factstream/text.hpp"

namespace factstream {

// Term -> query weight. Plain queries weight each term by its count.
using WeightedTerms = std::map<std::string, double, std::less<>>;

struct Posting {
  std::uint32_t doc = 0;  // ordinal into the indexed slice
  std::uint32_t tf = 0;
};

class InvertedIndex {
 public:
  // Throws Error("empty corpus") when `docs` is empty.
  static InvertedIndex Build(std::span<const Document> docs,
                             const text::Analyzer& analyzer = text::Analyzer());

  std::size_t num_docs() const { return doc_ids_.size(); }
  double avg_doc_length() const { return avg_doc_length_; }
  std::uint32_t doc_length(std::size_t doc) const { return doc_lengths_[doc]; }
  const std::string& doc_id(std::size_t doc) const { return doc_ids_[doc]; }
  const std::string& doc_text(std::size_t doc) const { return doc_texts_[doc]; }
  std::int64_t doc_timestamp(std::size_t doc) const {
    return doc_timestamps_[doc];
  }
  const text::Analyzer& analyzer() const { return analyzer_; }

  // Empty span for unknown terms.
  std::span<const Posting> postings(std::string_view term) const;
  std::size_t doc_freq(std::string_view term) const {
    return postings(term).size();
  }
  // F(t): total occurrences in the slice.
  std::uint64_t collection_tf(std::string_view term) const;
  // Term frequencies of one document.
  const std::map<std::string, std::uint32_t>& doc_terms(std::size_t doc) const {
    return doc_terms_[doc];
  }
  std::size_t vocabulary_size() const { return postings_.size(); }

 private:
  struct TermEntry {
    std::vector<Posting> postings;
    std::uint64_t collection_tf = 0;
  };

  text::Analyzer analyzer_;
  std::map<std::string, TermEntry, std::less<>> postings_;
  std::vector<std::map<std::string, std::uint32_t>> doc_terms_;
  std::vector<std::uint32_t> doc_lengths_;
  std::vector<std::string> doc_ids_;
  std::vector<std::string> doc_texts_;
  std::vector<std::int64_t> doc_timestamps_;
  double avg_doc_length_ = 0.0;
};

struct RetrievalParams {
  double k1 = 1.2;
  double b = 0.75;
  int k_stage1 = 100;
  int fb_docs = 3;
  int fb_terms = 10;
  bool expand = true;  // Bo1 second pass

  // Throws Error unless k1 >= 0, 0 <= b <= 1, k_stage1 > 0, fb_docs >= 1 and
  // fb_terms >= 1.
  void Validate() const;
};

// Throws Error if the parameters are invalid.
RetrievalParams MakeRetrievalParams(double k1, double b, int k_stage1,
                                    int fb_docs, int fb_terms,
                                    bool expand = true);

struct ClusterEntry {
  std::string doc_id;
  double score = 0.0;

  bool operator==(const ClusterEntry&) const = default;
};

// Ranked candidates of one query: score descending, doc_id ascending on
// ties, no repeated doc_id or normalized text.
struct Cluster {
  std::string query_id;
  std::vector<ClusterEntry> entries;

  void Sort();
};

// ln((N - n + 0.5) / (n + 0.5) + 1); never negative for n <= N.
double Bm25Idf(std::size_t num_docs, std::size_t doc_freq);

double Bm25Score(const InvertedIndex& index, const WeightedTerms& terms,
                 std::size_t doc, const RetrievalParams& params);

// Counts of the analyzed query text plus indicative terms.
WeightedTerms QueryTerms(const Query& query, const text::Analyzer& analyzer);

// Bag of terms with unit weight per occurrence.
WeightedTerms CountTerms(const std::vector<std::string>& tokens);

// Every document matching at least one weighted term, ranked, without
// deduplication or truncation.
Cluster RankAll(const InvertedIndex& index, const WeightedTerms& terms,
                const RetrievalParams& params, std::string query_id = {});

// Bo1 divergence-from-randomness weight of one feedback term.
double Bo1TermWeight(double feedback_tf, std::uint64_t collection_tf,
                     std::size_t num_docs);

// Expanded query: original terms weighted count/max_count, plus w(t)/w_max
// for the fb_terms best Bo1 terms of the top fb_docs first-pass documents.
WeightedTerms Bo1Expand(const InvertedIndex& index,
                        const WeightedTerms& original,
                        const Cluster& first_pass,
                        const RetrievalParams& params);

// BM25, Bo1 expansion, second BM25 pass, exact-duplicate removal, top
// k_stage1. The index must cover one event-day slice.
Cluster RetrieveCandidates(const InvertedIndex& index, const Query& query,
                           const RetrievalParams& params);

// Drops entries whose normalized text repeats an earlier-kept entry. The
// kept copy is the highest-scored, then earliest, then smallest doc_id.
Cluster DropDuplicates(const InvertedIndex& index, const Cluster& cluster);

}  // namespace factstream

#endif  // FACTSTREAM_RETRIEVE_HPP_
