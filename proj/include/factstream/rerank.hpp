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

#ifndef FACTSTREAM_RERANK_HPP_
#define FACTSTREAM_RERANK_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "factstream/corpus.hpp"
#include "factstream/entities.hpp"
#include "factstream/error.hpp"
#include "factstream/retrieve.hpp"

namespace factstream {

struct RerankParams {
  int k_stage2 = 25;

  // Throws Error unless 0 < k_stage2 <= k_stage1.
  void Validate(int k_stage1) const;
};

// Bag-of-entities score: one per mention whose type the profile expects,
// plus the case-insensitive whole-token occurrence count of every keyword.
double BoeScore(const std::vector<EntityMention>& mentions,
                std::string_view text, const QueryProfile& profile);

// Occurrences of `phrase` as a contiguous token sequence in `text`.
int CountPhrase(std::string_view text, std::string_view phrase);

// Rescores every entry with BoeScore over the document text looked up by
// doc_id, then re-sorts.
Cluster RerankBoe(const Cluster& cluster,
                  const std::map<std::string, std::string, std::less<>>& texts,
                  const QueryProfile& profile, const EntityTagger& tagger);

// (query_id, doc_id) -> score, as carried by scores.jsonl.
class ScoreTable {
 public:
  // Throws Error on a NaN or infinite score.
  void Set(std::string query_id, std::string doc_id, double score);
  const double* Find(std::string_view query_id, std::string_view doc_id) const;
  std::size_t size() const { return scores_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
};

// Throws Error naming every (query_id, doc_id) pair of the cluster that the
// table lacks.
Cluster InjectExternalScores(const Cluster& cluster, const ScoreTable& scores);

// Prefix of at most k_stage2 entries.
Cluster SelectTop(const Cluster& cluster, const RerankParams& params);

}  // namespace factstream

#endif  // FACTSTREAM_RERANK_HPP_
