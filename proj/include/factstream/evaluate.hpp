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

#ifndef FACTSTREAM_EVALUATE_HPP_
#define FACTSTREAM_EVALUATE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "factstream/error.hpp"

namespace factstream {

struct Fact {
  std::string fact_id;
  double gain = 1.0;
};

struct FactList {
  std::vector<Fact> facts;

  // Throws Error on repeated fact_ids or non-positive gains.
  void Validate() const;
};

// fact_id -> ids of summary items matching it.
struct MatchSet {
  std::map<std::string, std::set<std::string>> matches;

  std::size_t Count(const std::string& fact_id) const;
};

// Gain of matched facts over total gain. Throws Error on an empty list.
double Comprehensiveness(const FactList& facts, const MatchSet& matches);

// Matched gain over match-count-weighted gain; nullopt when nothing matched.
std::optional<double> RedundancyRatio(const FactList& facts,
                                      const MatchSet& matches);

// Keeps only matches against the given summary item ids.
MatchSet RestrictMatches(const MatchSet& matches,
                         const std::set<std::string>& summary_items);

using EventDay = std::pair<std::string, int>;

struct MacroAverage {
  std::map<std::string, double> per_event;
  std::optional<double> overall;
  std::vector<std::string> warnings;
};

// Mean over each event's defined days, then mean over events. Events without
// any defined day are left out with a warning.
MacroAverage MacroAverageByEvent(
    const std::map<EventDay, std::optional<double>>& per_day);

struct TrendRow {
  std::string event_id;
  int day = 0;
  double value = 0.0;
};

// Rows grouped by event, ordered by day; undefined days are omitted.
std::vector<TrendRow> TrendSeries(
    const std::map<EventDay, std::optional<double>>& per_day);

// "event,day_index,value" header plus one line per row.
std::string TrendCsv(const std::vector<TrendRow>& rows);

}  // namespace factstream

#endif  // FACTSTREAM_EVALUATE_HPP_
