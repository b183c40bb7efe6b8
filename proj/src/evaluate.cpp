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

#include "factstream/evaluate.hpp"

#include <cstdio>

#include "factstream/text.hpp"

namespace factstream {

void FactList::Validate() const {
  std::set<std::string> seen;
  for (const auto& f : facts) {
    if (!seen.insert(f.fact_id).second) {
      throw Error("duplicate fact_id " + f.fact_id);
    }
    if (!(f.gain > 0.0)) throw Error("fact " + f.fact_id + ": gain must be > 0");
  }
}

std::size_t MatchSet::Count(const std::string& fact_id) const {
  auto it = matches.find(fact_id);
  return it == matches.end() ? 0 : it->second.size();
}

double Comprehensiveness(const FactList& facts, const MatchSet& matches) {
  if (facts.facts.empty()) throw Error("comprehensiveness: empty fact list");
  double total = 0.0;
  double matched = 0.0;
  for (const auto& f : facts.facts) {
    total += f.gain;
    if (matches.Count(f.fact_id) > 0) matched += f.gain;
  }
  return matched / total;
}

std::optional<double> RedundancyRatio(const FactList& facts,
                                      const MatchSet& matches) {
  double numerator = 0.0;
  double denominator = 0.0;
  for (const auto& f : facts.facts) {
    const auto n = matches.Count(f.fact_id);
    if (n == 0) continue;
    numerator += f.gain;
    denominator += f.gain * static_cast<double>(n);
  }
  if (denominator == 0.0) return std::nullopt;
  return numerator / denominator;
}

MatchSet RestrictMatches(const MatchSet& matches,
                         const std::set<std::string>& summary_items) {
  MatchSet out;
  for (const auto& [fact, items] : matches.matches) {
    std::set<std::string> kept;
    for (const auto& item : items) {
      if (summary_items.contains(item)) kept.insert(item);
    }
    if (!kept.empty()) out.matches.emplace(fact, std::move(kept));
  }
  return out;
}

MacroAverage MacroAverageByEvent(
    const std::map<EventDay, std::optional<double>>& per_day) {
  std::map<std::string, std::pair<double, int>> sums;
  std::set<std::string> events;
  for (const auto& [key, value] : per_day) {
    events.insert(key.first);
    if (!value) continue;
    auto& [sum, n] = sums[key.first];
    sum += *value;
    ++n;
  }
  MacroAverage out;
  double total = 0.0;
  for (const auto& event : events) {
    auto it = sums.find(event);
    if (it == sums.end()) {
      out.warnings.push_back("event " + event +
                             " has no defined days; excluded from average");
      continue;
    }
    const double mean = it->second.first / it->second.second;
    out.per_event[event] = mean;
    total += mean;
  }
  if (!out.per_event.empty()) {
    out.overall = total / static_cast<double>(out.per_event.size());
  }
  return out;
}

std::vector<TrendRow> TrendSeries(
    const std::map<EventDay, std::optional<double>>& per_day) {
  std::vector<TrendRow> rows;
  // Map order is (event, day), already the required grouping.
  for (const auto& [key, value] : per_day) {
    if (value) rows.push_back({key.first, key.second, *value});
  }
  return rows;
}

std::string TrendCsv(const std::vector<TrendRow>& rows) {
  std::string out = "event,day_index,value\n";
  for (const auto& row : rows) {
    char value[64];
    std::snprintf(value, sizeof(value), "%.17g", row.value);
    out += row.event_id + "," + std::to_string(row.day) + "," + value + "\n";
  }
  return out;
}

}  // namespace factstream
