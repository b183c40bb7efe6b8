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

#ifndef FACTSTREAM_PIPELINE_HPP_
#define FACTSTREAM_PIPELINE_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "factstream/corpus.hpp"
#include "factstream/error.hpp"
#include "factstream/io.hpp"
#include "factstream/rerank.hpp"
#include "factstream/retrieve.hpp"
#include "factstream/score.hpp"
#include "factstream/select.hpp"

namespace factstream {

enum class RerankerKind { kBoe, kExternal };

RerankerKind ParseRerankerKind(std::string_view name);

struct PipelineConfig {
  std::string corpus_path;
  std::string queries_path;
  std::string timeline_path;
  std::string scores_path;      // required when reranker == kExternal
  std::string output_path;      // run file; empty writes to stdout
  std::string candidates_path;  // optional candidates.jsonl dump
  std::string tagger = "rule";
  std::optional<std::string> event;  // restrict to one event

  RetrievalParams retrieval;
  RerankParams rerank;
  std::size_t max_docs = 150;
  MmrParams mmr;
  RerankerKind reranker = RerankerKind::kBoe;
  SolverKind solver = SolverKind::kAuto;
  std::size_t exact_cap = kDefaultExactCap;
  int threads = 1;
  bool verbose = false;

  // Parameter invariants only; file existence is checked by LoadInputs.
  void Validate() const;
};

// Reads a JSON config document. Relative paths resolve against the config
// file's directory. Unknown keys are rejected.
PipelineConfig LoadPipelineConfig(const std::string& path);

struct PipelineInputs {
  std::vector<Document> docs;
  std::map<std::string, std::vector<Query>> queries;
  std::map<std::string, EventTimeline> timelines;
  std::optional<ScoreTable> scores;
};

// Throws Error if a referenced file is missing or malformed, or if external
// reranking is configured without a scores file.
PipelineInputs LoadInputs(const PipelineConfig& config);

struct StageCounts {
  std::size_t slice_docs = 0;
  std::size_t retrieved = 0;  // summed over queries
  std::size_t reranked = 0;
  std::size_t pool = 0;
  std::size_t concepts = 0;
  std::size_t selected = 0;
};

struct DayResult {
  std::vector<io::RunRecord> records;
  std::vector<io::CandidateRecord> candidates;
  StageCounts counts;
};

// Runs the days of one event in temporal order, carrying the past-summary
// state from one day to the next.
class EventRunner {
 public:
  EventRunner(const PipelineConfig& config, std::vector<Document> docs,
              std::vector<Query> queries, EventTimeline timeline,
              const ScoreTable* scores, const EntityTagger& tagger,
              std::ostream* log = nullptr);

  std::size_t num_days() const { return timeline_.size(); }
  std::size_t next_day() const { return next_day_; }

  // Day indices are 0-based here and 1-based in emitted records. Throws
  // Error unless `index` is the next unprocessed day.
  DayResult RunDay(std::size_t index);

  const SummaryState& state() const { return state_; }

 private:
  PipelineConfig config_;
  std::vector<Document> docs_;
  std::vector<Query> queries_;
  EventTimeline timeline_;
  const ScoreTable* scores_;
  const EntityTagger& tagger_;
  std::ostream* log_;
  SummaryState state_;
  std::size_t next_day_ = 0;
};

struct RunOutput {
  std::vector<io::RunRecord> records;
  std::vector<io::CandidateRecord> candidates;
};

// Every configured event (or only config.event), events in id order, days
// in temporal order. Events run on up to config.threads threads; output is
// independent of the thread count.
RunOutput RunPipeline(const PipelineConfig& config,
                      const PipelineInputs& inputs,
                      std::ostream* log = nullptr);

}  // namespace factstream

#endif  // FACTSTREAM_PIPELINE_HPP_
