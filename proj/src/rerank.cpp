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

#include "factstream/rerank.hpp"

#include <cmath>

#include "factstream/text.hpp"

namespace factstream {

void RerankParams::Validate(int k_stage1) const {
  if (k_stage2 <= 0) throw Error("rerank: k_stage2 must be > 0");
  if (k_stage2 > k_stage1) throw Error("rerank: k_stage2 must be <= k_stage1");
}

int CountPhrase(std::string_view text, std::string_view phrase) {
  const auto needle = text::WordTokens(phrase);
  if (needle.empty()) return 0;
  const auto hay = text::WordTokens(text);
  int count = 0;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < needle.size(); ++k) {
      if (hay[i + k] != needle[k]) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

double BoeScore(const std::vector<EntityMention>& mentions,
                std::string_view text, const QueryProfile& profile) {
  double score = 0.0;
  for (const auto& m : mentions) {
    if (profile.expected_entity_types.contains(m.etype)) score += 1.0;
  }
  for (const auto& keyword : profile.keywords) {
    score += CountPhrase(text, keyword);
  }
  return score;
}

Cluster RerankBoe(const Cluster& cluster,
                  const std::map<std::string, std::string, std::less<>>& texts,
                  const QueryProfile& profile, const EntityTagger& tagger) {
  Cluster out;
  out.query_id = cluster.query_id;
  out.entries.reserve(cluster.entries.size());
  for (const auto& entry : cluster.entries) {
    auto it = texts.find(entry.doc_id);
    if (it == texts.end()) throw Error("rerank: unknown doc " + entry.doc_id);
    const auto mentions = tagger.Tag(entry.doc_id, it->second);
    out.entries.push_back(
        {entry.doc_id, BoeScore(mentions, it->second, profile)});
  }
  out.Sort();
  return out;
}

void ScoreTable::Set(std::string query_id, std::string doc_id, double score) {
  if (!std::isfinite(score)) {
    throw Error("score for (" + query_id + ", " + doc_id + ") is not finite");
  }
  scores_[{std::move(query_id), std::move(doc_id)}] = score;
}

const double* ScoreTable::Find(std::string_view query_id,
                               std::string_view doc_id) const {
  auto it = scores_.find({std::string(query_id), std::string(doc_id)});
  return it == scores_.end() ? nullptr : &it->second;
}

Cluster InjectExternalScores(const Cluster& cluster, const ScoreTable& scores) {
  Cluster out;
  out.query_id = cluster.query_id;
  std::string missing;
  for (const auto& entry : cluster.entries) {
    const double* score = scores.Find(cluster.query_id, entry.doc_id);
    if (score == nullptr) {
      missing += " (" + cluster.query_id + ", " + entry.doc_id + ")";
      continue;
    }
    out.entries.push_back({entry.doc_id, *score});
  }
  if (!missing.empty()) throw Error("external scores missing for" + missing);
  out.Sort();
  return out;
}

Cluster SelectTop(const Cluster& cluster, const RerankParams& params) {
  if (params.k_stage2 <= 0) throw Error("rerank: k_stage2 must be > 0");
  Cluster out = cluster;
  if (out.entries.size() > static_cast<std::size_t>(params.k_stage2)) {
    out.entries.resize(params.k_stage2);
  }
  return out;
}

}  // namespace factstream
