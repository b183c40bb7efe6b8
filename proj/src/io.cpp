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

#include "factstream/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace factstream::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Calls `fn(json, line_no)` for each nonblank line, wrapping JSON errors
// with the location.
template <typename Fn>
void ForEachJsonLine(std::istream& in, const std::string& name, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    try {
      fn(json::parse(line), line_no);
    } catch (const json::exception& e) {
      throw Error(name + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

// A whole-file object or array, or else JSON Lines.
std::vector<json> LoadJsonDocuments(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  std::vector<json> docs;
  json whole = json::parse(content, nullptr, /*allow_exceptions=*/false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (auto& d : whole) docs.push_back(std::move(d));
    } else {
      docs.push_back(std::move(whole));
    }
    return docs;
  }
  std::istringstream lines(content);
  ForEachJsonLine(lines, path,
                  [&](json j, std::size_t) { docs.push_back(std::move(j)); });
  return docs;
}

template <typename T>
T Field(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(where + ": field \"" + key + "\": " + e.what());
  }
}

}  // namespace

std::vector<Document> ParseCorpus(std::istream& in, const std::string& name) {
  std::vector<Document> docs;
  std::set<std::pair<std::string, std::string>> seen;
  ForEachJsonLine(in, name, [&](const json& j, std::size_t) {
    Document doc = MakeDocument(
        j.at("doc_id").get<std::string>(), j.at("event_id").get<std::string>(),
        ParseSourceType(j.at("source_type").get<std::string>()),
        j.at("unix_timestamp").get<std::int64_t>(),
        j.at("text").get<std::string>());
    if (!seen.insert({doc.event_id, doc.doc_id}).second) {
      throw Error("doc_id " + doc.doc_id + " repeats within event " +
                  doc.event_id);
    }
    docs.push_back(std::move(doc));
  });
  return docs;
}

std::vector<Document> LoadCorpus(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return ParseCorpus(in, path);
}

std::map<std::string, std::vector<Query>> LoadQueries(const std::string& path) {
  std::map<std::string, std::vector<Query>> out;
  for (const auto& doc : LoadJsonDocuments(path)) {
    const auto event = Field<std::string>(doc, "event_id", path);
    auto& queries = out[event];
    for (const auto& q : doc.at("queries")) {
      Query query;
      query.query_id = Field<std::string>(q, "query_id", path);
      query.text = Field<std::string>(q, "text", path);
      query.indicative_terms =
          Field<std::vector<std::string>>(q, "indicative_terms", path);
      for (const auto& label : q.value("entity_types", json::array())) {
        query.profile.expected_entity_types.insert(
            ParseEntityType(label.get<std::string>()));
      }
      auto keywords = q.value("keywords", std::vector<std::string>{});
      if (keywords.empty()) keywords = query.indicative_terms;
      query.profile.keywords.insert(keywords.begin(), keywords.end());
      queries.push_back(std::move(query));
    }
    ValidateQueries(queries);
  }
  return out;
}

std::map<std::string, EventTimeline> LoadTimelines(const std::string& path) {
  std::map<std::string, EventTimeline> out;
  for (const auto& doc : LoadJsonDocuments(path)) {
    const auto event = Field<std::string>(doc, "event_id", path);
    std::vector<Period> periods;
    for (const auto& p : doc.at("periods")) {
      periods.push_back({Field<std::int64_t>(p, "start", path),
                         Field<std::int64_t>(p, "end", path)});
    }
    out.emplace(event, EventTimeline(event, std::move(periods)));
  }
  return out;
}

ScoreTable ParseScores(std::istream& in, const std::string& name) {
  ScoreTable table;
  ForEachJsonLine(in, name, [&](const json& j, std::size_t) {
    const auto& score = j.at("score");
    if (!score.is_number()) throw Error("score is not a number");
    table.Set(j.at("query_id").get<std::string>(),
              j.at("doc_id").get<std::string>(), score.get<double>());
  });
  return table;
}

ScoreTable LoadScores(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return ParseScores(in, path);
}

void WriteCandidates(std::ostream& out,
                     const std::vector<CandidateRecord>& records) {
  for (const auto& r : records) {
    ordered_json j;
    j["event_id"] = r.event_id;
    j["day"] = r.day;
    j["query_id"] = r.query_id;
    j["doc_id"] = r.doc_id;
    j["text"] = r.text;
    j["bm25_score"] = r.bm25_score;
    out << j.dump() << '\n';
  }
}

void WriteRunfile(std::ostream& out, const std::vector<RunRecord>& records) {
  for (const auto& r : records) {
    ordered_json j;
    j["event_id"] = r.event_id;
    j["day"] = r.day;
    j["doc_id"] = r.doc_id;
    j["importance"] = r.importance;
    j["rank"] = r.rank;
    out << j.dump() << '\n';
  }
}

std::vector<RunRecord> LoadRunfile(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::vector<RunRecord> records;
  ForEachJsonLine(in, path, [&](const json& j, std::size_t) {
    records.push_back({j.at("event_id").get<std::string>(),
                       j.at("day").get<int>(), j.at("doc_id").get<std::string>(),
                       j.at("importance").get<double>(),
                       j.at("rank").get<int>()});
  });
  return records;
}

std::map<EventDay, FactList> LoadFacts(const std::string& path) {
  std::map<EventDay, FactList> out;
  for (const auto& doc : LoadJsonDocuments(path)) {
    const EventDay key{Field<std::string>(doc, "event_id", path),
                       Field<int>(doc, "day", path)};
    FactList list;
    for (const auto& f : doc.at("facts")) {
      list.facts.push_back({Field<std::string>(f, "fact_id", path),
                            Field<double>(f, "gain", path)});
    }
    list.Validate();
    if (!out.emplace(key, std::move(list)).second) {
      throw Error(path + ": facts for " + key.first + " day " +
                  std::to_string(key.second) + " given twice");
    }
  }
  return out;
}

std::map<EventDay, MatchSet> LoadMatches(const std::string& path) {
  std::map<EventDay, MatchSet> out;
  for (const auto& doc : LoadJsonDocuments(path)) {
    const EventDay key{Field<std::string>(doc, "event_id", path),
                       Field<int>(doc, "day", path)};
    MatchSet set;
    for (const auto& [fact, items] : doc.at("matches").items()) {
      auto ids = items.get<std::vector<std::string>>();
      set.matches[fact].insert(ids.begin(), ids.end());
    }
    out[key] = std::move(set);
  }
  return out;
}

Metrics EvaluateRun(const std::vector<RunRecord>& run,
                    const std::map<EventDay, FactList>& facts,
                    const std::map<EventDay, MatchSet>& matches, int cutoff) {
  if (cutoff < 1) throw Error("evaluation cutoff must be >= 1");
  std::map<EventDay, std::vector<const RunRecord*>> by_day;
  for (const auto& r : run) by_day[{r.event_id, r.day}].push_back(&r);

  Metrics metrics;
  metrics.cutoff = cutoff;
  std::map<EventDay, std::optional<double>> comp;
  std::map<EventDay, std::optional<double>> red;
  for (const auto& [key, list] : facts) {
    if (list.facts.empty()) continue;
    std::set<std::string> prefix;
    if (auto it = by_day.find(key); it != by_day.end()) {
      auto records = it->second;
      std::sort(records.begin(), records.end(),
                [](const RunRecord* a, const RunRecord* b) {
                  return a->rank < b->rank;
                });
      for (std::size_t i = 0;
           i < records.size() && i < static_cast<std::size_t>(cutoff); ++i) {
        prefix.insert(records[i]->doc_id);
      }
    }
    MatchSet matched;
    if (auto it = matches.find(key); it != matches.end()) {
      for (const auto& [fact, items] : it->second.matches) {
        const bool known = std::any_of(
            list.facts.begin(), list.facts.end(),
            [&](const Fact& f) { return f.fact_id == fact; });
        if (!known) {
          throw Error("matches reference unknown fact " + fact + " for " +
                      key.first + " day " + std::to_string(key.second));
        }
      }
      matched = RestrictMatches(it->second, prefix);
    }
    DayMetrics day{key.first, key.second, Comprehensiveness(list, matched),
                   RedundancyRatio(list, matched)};
    comp[key] = day.comprehensiveness;
    red[key] = day.redundancy_ratio;
    metrics.per_day.push_back(std::move(day));
  }
  metrics.comprehensiveness = MacroAverageByEvent(comp);
  metrics.redundancy_ratio = MacroAverageByEvent(red);
  return metrics;
}

namespace {

ordered_json MacroJson(const MacroAverage& m) {
  ordered_json j;
  j["per_event"] = ordered_json::object();
  for (const auto& [event, v] : m.per_event) j["per_event"][event] = v;
  j["overall"] = m.overall ? ordered_json(*m.overall) : ordered_json(nullptr);
  return j;
}

}  // namespace

std::string MetricsJson(const Metrics& metrics) {
  ordered_json j;
  j["cutoff"] = metrics.cutoff;
  j["per_day"] = ordered_json::array();
  for (const auto& d : metrics.per_day) {
    ordered_json row;
    row["event_id"] = d.event_id;
    row["day"] = d.day;
    row["comprehensiveness"] = d.comprehensiveness;
    row["redundancy_ratio"] = d.redundancy_ratio
                                  ? ordered_json(*d.redundancy_ratio)
                                  : ordered_json(nullptr);
    j["per_day"].push_back(std::move(row));
  }
  j["comprehensiveness"] = MacroJson(metrics.comprehensiveness);
  j["redundancy_ratio"] = MacroJson(metrics.redundancy_ratio);
  ordered_json warnings = ordered_json::array();
  for (const auto& w : metrics.comprehensiveness.warnings) warnings.push_back(w);
  for (const auto& w : metrics.redundancy_ratio.warnings) warnings.push_back(w);
  j["warnings"] = std::move(warnings);
  return j.dump(2) + "\n";
}

std::map<EventDay, std::optional<double>> LoadComprehensiveness(
    const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::map<EventDay, std::optional<double>> out;
  try {
    const json j = json::parse(in);
    for (const auto& row : j.at("per_day")) {
      const auto& v = row.at("comprehensiveness");
      out[{row.at("event_id").get<std::string>(), row.at("day").get<int>()}] =
          v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
    }
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
  return out;
}

}  // namespace factstream::io
