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

#ifndef FACTSTREAM_SYNTHETIC_HPP_
#define FACTSTREAM_SYNTHETIC_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "factstream/corpus.hpp"
#include "factstream/error.hpp"
#include "factstream/evaluate.hpp"

// Generated crisis events with planted facts, for end-to-end testing. The
// oracle matcher here is a substring test against planted fact phrases. It
// stands in for human assessors on synthetic data only and says nothing
// about matching quality on real streams.
namespace factstream::synthetic {

struct PlantedFact {
  std::string fact_id;
  std::string phrase;  // appears verbatim in every matching item
  double gain = 1.0;
};

struct SyntheticEvent {
  std::string event_id;
  std::vector<Document> docs;
  std::vector<Query> queries;
  EventTimeline timeline;
  std::map<int, std::vector<PlantedFact>> facts_by_day;  // 1-based days
};

struct GeneratorOptions {
  int days = 3;
  int items_per_day = 200;
  int num_facts = 10;
};

SyntheticEvent GenerateEvent(std::uint64_t seed,
                             const GeneratorOptions& options = {});

// fact_id -> ids of items whose normalized text contains the phrase.
MatchSet OracleMatch(const std::vector<PlantedFact>& facts,
                     const std::vector<std::pair<std::string, std::string>>&
                         items);

FactList ToFactList(const std::vector<PlantedFact>& facts);

// Writes corpus.jsonl, queries.json, timeline.json, facts.json and
// matches.json (oracle matches over every item of each day) into `dir`.
void WriteEventFiles(const SyntheticEvent& event, const std::string& dir);

}  // namespace factstream::synthetic

#endif  // FACTSTREAM_SYNTHETIC_HPP_
