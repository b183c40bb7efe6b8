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

#ifndef FACTSTREAM_IO_HPP_
#define FACTSTREAM_IO_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factstream/corpus.hpp"
#include "factstream/error.hpp"
#include "factstream/evaluate.hpp"
#include "factstream/rerank.hpp"

namespace factstream::io {

// corpus.jsonl: {"doc_id", "event_id", "source_type", "unix_timestamp",
// "text"} per line. Texts are normalized on load. Throws Error with the
// line number on malformed lines and on doc_ids repeated within an event.
std::vector<Document> LoadCorpus(const std::string& path);
std::vector<Document> ParseCorpus(std::istream& in, const std::string& name);

// queries.json: one {"event_id", "queries": [...]} object or an array of
// them. Profile keywords fall back to the indicative terms when absent.
std::map<std::string, std::vector<Query>> LoadQueries(const std::string& path);

// timeline.json: one {"event_id", "periods": [{"start", "end"}]} object or
// an array of them.
std::map<std::string, EventTimeline> LoadTimelines(const std::string& path);

// scores.jsonl: {"query_id", "doc_id", "score"} per line.
ScoreTable LoadScores(const std::string& path);
ScoreTable ParseScores(std::istream& in, const std::string& name);

struct CandidateRecord {
  std::string event_id;
  int day = 0;
  std::string query_id;
  std::string doc_id;
  std::string text;
  double bm25_score = 0.0;
};

void WriteCandidates(std::ostream& out,
                     const std::vector<CandidateRecord>& records);

struct RunRecord {
  std::string event_id;
  int day = 0;
  std::string doc_id;
  double importance = 0.0;
  int rank = 0;  // 1-based pick order
};

void WriteRunfile(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> LoadRunfile(const std::string& path);

// facts.json / matches.json: one object, a JSON array of objects, or one
// object per line.
std::map<EventDay, FactList> LoadFacts(const std::string& path);
std::map<EventDay, MatchSet> LoadMatches(const std::string& path);

struct DayMetrics {
  std::string event_id;
  int day = 0;
  double comprehensiveness = 0.0;
  std::optional<double> redundancy_ratio;
};

struct Metrics {
  int cutoff = 0;
  std::vector<DayMetrics> per_day;
  MacroAverage comprehensiveness;
  MacroAverage redundancy_ratio;
};

// Scores every event-day of `facts` against the top-`cutoff` run records
// of that event-day. Matches outside the cutoff prefix are ignored.
Metrics EvaluateRun(const std::vector<RunRecord>& run,
                    const std::map<EventDay, FactList>& facts,
                    const std::map<EventDay, MatchSet>& matches, int cutoff);

std::string MetricsJson(const Metrics& metrics);

// Per-day comprehensiveness from a metrics.json document.
std::map<EventDay, std::optional<double>> LoadComprehensiveness(
    const std::string& path);

}  // namespace factstream::io

#endif  // FACTSTREAM_IO_HPP_
