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

#include "factstream/synthetic.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <random>

#include "factstream/text.hpp"
#include "json.hpp"

namespace factstream::synthetic {
namespace {

using nlohmann::ordered_json;

constexpr std::int64_t kDaySeconds = 86400;
constexpr std::int64_t kEpoch = 1'600'000'000;

const std::vector<std::string> kLocations = {
    "Paradise",  "Chico",      "Oroville",    "Magalia",   "Pacifica",
    "Malibu",    "Ventura",    "Oxnard",      "Santa Rosa", "Fallbrook",
    "Bonsall",   "Oceanside",  "Idyllwild",   "Corona",    "Sylmar",
    "Ellicott City", "Catonsville", "New Bern", "Wilmington", "Pensacola"};

const std::vector<std::string> kRoads = {"Highway 99", "Interstate 10",
                                         "Pacific Coast Highway"};

const std::vector<std::string> kPeople = {"Gavin Newsom", "Jerry Brown",
                                          "Kory Honea", "Larry Hogan"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int Int(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  bool Chance(double p) { return std::bernoulli_distribution(p)(gen_); }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(Int(0, static_cast<int>(v.size()) - 1))];
  }
  template <typename T>
  void Shuffle(std::vector<T>* v) {
    std::shuffle(v->begin(), v->end(), gen_);
  }

 private:
  std::mt19937_64 gen_;
};

std::string WithThousands(int n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

// Phrase of fact template `kind` with fresh slot values.
std::string FactPhrase(int kind, const std::string& loc, Rng* rng) {
  switch (kind % 10) {
    case 0:
      return std::to_string(rng->Int(3, 40)) + " people missing in " + loc;
    case 1:
      return "evacuation order issued for " + loc;
    case 2:
      return "shelter opened in " + loc + " by the " +
             (rng->Chance(0.5) ? "Red Cross" : "Salvation Army");
    case 3:
      return rng->Pick(kRoads) + " closed near " + loc;
    case 4:
      return "fire has burned " + WithThousands(rng->Int(10, 95) * 1000) +
             " acres near " + loc;
    case 5:
      return "containment reached " + std::to_string(rng->Int(5, 95)) +
             "% around " + loc;
    case 6:
      return WithThousands(rng->Int(120, 9000)) + " homes destroyed in " + loc;
    case 7:
      return "$" + std::to_string(rng->Int(2, 90)) +
             " million in damage reported in " + loc;
    case 8:
      return std::string(rng->Chance(0.5) ? "National Guard" : "Coast Guard") +
             " deployed to " + loc;
    default:
      return "power restored to " + WithThousands(rng->Int(1000, 60000)) +
             " customers in " + loc;
  }
}

struct Item {
  SourceType source;
  std::string text;
};

Item WrapFact(const std::string& phrase, Rng* rng) {
  switch (rng->Int(0, 8)) {
    case 0:
      return {SourceType::kTwitter, phrase + " #CampFire"};
    case 1:
      return {SourceType::kTwitter,
              "RT @newsdesk" + std::to_string(rng->Int(1, 9)) + ": " + phrase};
    case 2:
      return {SourceType::kTwitter, "Update: " + phrase + " http://t.co/" +
                                        std::to_string(rng->Int(1000, 9999))};
    case 3:
      return {SourceType::kTwitter,
              phrase + " \xF0\x9F\x94\xA5 stay safe everyone"};
    case 4:
      return {SourceType::kNews, "Officials said " + phrase + " on Monday."};
    case 5:
      return {SourceType::kNews, "Authorities confirmed that " + phrase + "."};
    case 6:
      return {SourceType::kNews, phrase + ", according to the sheriff."};
    case 7:
      return {SourceType::kReddit, "Just heard " + phrase + ". Anyone nearby?"};
    default:
      return {SourceType::kReddit, phrase + " - source: local radio"};
  }
}

const std::vector<std::string> kOpeners = {
    "", "wow ", "ugh ", "honestly ", "update: ", "just saw that ", "seriously ",
    "can't believe ", "so ", "omg "};

const std::vector<std::string> kChatter = {
    "praying for everyone affected by the fire",
    "thoughts are with the firefighters tonight",
    "is anyone else missing their pets after the fire",
    "the evacuation traffic is terrible",
    "shelters need blankets and water",
    "roads are a mess right now",
    "power is out again at my place",
    "so much damage everywhere you look",
    "the smoke is unbelievable today",
    "containment seems really slow",
    "how many acres is it now",
    "my cousin had to evacuate last night",
    "people are still missing and nobody knows anything",
    "the highway looked closed from here",
    "damage reports keep coming in",
    "volunteers are helping at the shelter",
    "customers without power should call the utility",
    "homes on our street are gone",
    "the sky turned orange this afternoon",
    "stay safe and follow the evacuation orders"};

const std::vector<std::string> kTails = {
    "", " please share", " #prayers", " so scary", " unreal", " stay safe",
    " heartbreaking", " #wildfire", " thank you first responders", " smh",
    " more soon", " what a nightmare"};

Item Noise(Rng* rng) {
  const int kind = rng->Int(0, 9);
  if (kind <= 6) {
    const std::string body =
        rng->Pick(kOpeners) + rng->Pick(kChatter) + rng->Pick(kTails);
    const auto source =
        kind <= 4 ? SourceType::kTwitter : SourceType::kReddit;
    return {source, body};
  }
  if (kind == 7) {
    return {SourceType::kNews, rng->Pick(kPeople) + " visits " +
                                   rng->Pick(kLocations) + " to tour the area"};
  }
  if (kind == 8) {
    return {SourceType::kTwitter,
            rng->Pick(kOpeners) + "traffic in " + rng->Pick(kLocations) +
                " is normal this morning"};
  }
  // Stale or unconfirmed figure that is not a planted fact.
  return {SourceType::kReddit,
          rng->Pick(kOpeners) + "someone said " +
              std::to_string(rng->Int(2, 9)) +
              " hundred acres burned but that seems wrong"};
}

void WriteJson(const std::filesystem::path& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

ordered_json QueryJson(const std::string& id, const std::string& text,
                       const std::vector<std::string>& terms,
                       const std::vector<std::string>& types) {
  ordered_json q;
  q["query_id"] = id;
  q["text"] = text;
  q["indicative_terms"] = terms;
  q["entity_types"] = types;
  q["keywords"] = terms;
  return q;
}

std::vector<Query> BuildQueries(const std::string& event_id) {
  struct QueryTemplate {
    const char* id;
    const char* text;
    std::vector<std::string> terms;
    std::vector<EntityType> types;
  };
  using E = EntityType;
  const std::vector<QueryTemplate> templates = {
      {"missing", "Are people missing?", {"missing", "unaccounted"},
       {E::kNumber, E::kLocation}},
      {"evacuation", "Which areas are under evacuation orders?",
       {"evacuation", "evacuate", "order"}, {E::kLocation}},
      {"shelter", "Where are shelters open?", {"shelter", "shelters"},
       {E::kLocation, E::kOrganization}},
      {"roads", "Which roads are closed?", {"road", "closed", "highway"},
       {E::kLocation}},
      {"spread", "How large is the fire and how contained?",
       {"acres", "containment", "burned"}, {E::kNumber, E::kPercent}},
      {"damage", "What damage has been reported?",
       {"damage", "destroyed", "homes"}, {E::kNumber, E::kMoney}},
      {"response", "Which agencies are deployed?", {"deployed", "guard"},
       {E::kOrganization, E::kLocation}},
      {"power", "Where are power outages?", {"power", "customers", "outage"},
       {E::kNumber, E::kLocation}},
  };
  std::vector<Query> queries;
  for (const auto& s : templates) {
    Query q;
    q.query_id = event_id + "-" + s.id;
    q.text = s.text;
    q.indicative_terms = s.terms;
    q.profile.expected_entity_types.insert(s.types.begin(), s.types.end());
    q.profile.keywords.insert(s.terms.begin(), s.terms.end());
    queries.push_back(std::move(q));
  }
  return queries;
}

}  // namespace

SyntheticEvent GenerateEvent(std::uint64_t seed,
                             const GeneratorOptions& options) {
  if (options.days < 1 || options.items_per_day < 1 || options.num_facts < 0) {
    throw Error("synthetic: invalid generator options");
  }
  Rng rng(seed);
  SyntheticEvent event;
  event.event_id = "synth" + std::to_string(seed);
  event.queries = BuildQueries(event.event_id);

  std::vector<Period> periods;
  for (int d = 0; d < options.days; ++d) {
    periods.push_back({kEpoch + d * kDaySeconds, kEpoch + (d + 1) * kDaySeconds});
  }
  event.timeline = EventTimeline(event.event_id, periods);

  std::vector<std::string> locations = kLocations;
  rng.Shuffle(&locations);
  std::vector<PlantedFact> facts;
  std::vector<int> first_day;
  for (int i = 0; i < options.num_facts; ++i) {
    facts.push_back({event.event_id + "-f" + std::to_string(i),
                     FactPhrase(i, locations[i % locations.size()], &rng),
                     static_cast<double>(rng.Int(1, 3))});
    first_day.push_back(i * options.days / std::max(1, options.num_facts) + 1);
  }

  for (int day = 1; day <= options.days; ++day) {
    std::vector<Item> items;
    auto& day_facts = event.facts_by_day[day];
    for (int i = 0; i < options.num_facts; ++i) {
      int copies = 0;
      if (first_day[i] == day) {
        copies = rng.Int(3, 6);
      } else if (first_day[i] == day - 1 && rng.Chance(0.5)) {
        copies = rng.Int(1, 2);
      }
      if (copies == 0) continue;
      day_facts.push_back(facts[i]);
      for (int c = 0; c < copies; ++c) items.push_back(WrapFact(facts[i].phrase, &rng));
    }
    while (static_cast<int>(items.size()) < options.items_per_day) {
      // Retweets duplicate earlier chatter verbatim after normalization.
      if (!items.empty() && rng.Chance(0.08)) {
        const Item& src = items[static_cast<std::size_t>(
            rng.Int(0, static_cast<int>(items.size()) - 1))];
        items.push_back({SourceType::kTwitter, "RT @user" +
                                                   std::to_string(rng.Int(1, 500)) +
                                                   ": " + src.text});
        continue;
      }
      items.push_back(Noise(&rng));
    }
    rng.Shuffle(&items);
    const std::int64_t start = periods[day - 1].start;
    for (std::size_t k = 0; k < items.size(); ++k) {
      char id[32];
      std::snprintf(id, sizeof(id), "-d%d-%04zu", day, k);
      event.docs.push_back(MakeDocument(
          event.event_id + id, event.event_id, items[k].source,
          start + rng.Int(0, static_cast<int>(kDaySeconds) - 1),
          std::move(items[k].text)));
    }
  }
  return event;
}

MatchSet OracleMatch(
    const std::vector<PlantedFact>& facts,
    const std::vector<std::pair<std::string, std::string>>& items) {
  MatchSet out;
  for (const auto& f : facts) {
    for (const auto& [id, text] : items) {
      if (text.find(f.phrase) != std::string::npos) {
        out.matches[f.fact_id].insert(id);
      }
    }
  }
  return out;
}

FactList ToFactList(const std::vector<PlantedFact>& facts) {
  FactList list;
  for (const auto& f : facts) list.facts.push_back({f.fact_id, f.gain});
  return list;
}

void WriteEventFiles(const SyntheticEvent& event, const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  fs::create_directories(root);

  {
    std::ofstream out(root / "corpus.jsonl");
    if (!out) throw Error("cannot write corpus.jsonl in " + dir);
    for (const auto& d : event.docs) {
      ordered_json j;
      j["doc_id"] = d.doc_id;
      j["event_id"] = d.event_id;
      j["source_type"] = std::string(SourceTypeName(d.source));
      j["unix_timestamp"] = d.timestamp;
      j["text"] = d.raw_text;
      out << j.dump() << '\n';
    }
  }

  ordered_json queries;
  queries["event_id"] = event.event_id;
  queries["queries"] = ordered_json::array();
  for (const auto& q : event.queries) {
    std::vector<std::string> types;
    for (auto t : q.profile.expected_entity_types) {
      types.emplace_back(EntityTypeName(t));
    }
    queries["queries"].push_back(
        QueryJson(q.query_id, q.text, q.indicative_terms, types));
  }
  WriteJson(root / "queries.json", queries);

  ordered_json timeline;
  timeline["event_id"] = event.event_id;
  timeline["periods"] = ordered_json::array();
  for (const auto& p : event.timeline.periods()) {
    timeline["periods"].push_back({{"start", p.start}, {"end", p.end}});
  }
  WriteJson(root / "timeline.json", timeline);

  ordered_json facts = ordered_json::array();
  ordered_json matches = ordered_json::array();
  for (const auto& [day, list] : event.facts_by_day) {
    ordered_json f;
    f["event_id"] = event.event_id;
    f["day"] = day;
    f["facts"] = ordered_json::array();
    for (const auto& fact : list) {
      f["facts"].push_back({{"fact_id", fact.fact_id}, {"gain", fact.gain}});
    }
    facts.push_back(std::move(f));

    std::vector<std::pair<std::string, std::string>> items;
    for (const auto& d : event.docs) {
      if (AssignPeriod(d, event.timeline) == static_cast<std::size_t>(day - 1)) {
        items.emplace_back(d.doc_id, d.text);
      }
    }
    ordered_json m;
    m["event_id"] = event.event_id;
    m["day"] = day;
    m["matches"] = ordered_json::object();
    for (const auto& [fact, ids] : OracleMatch(list, items).matches) {
      m["matches"][fact] = std::vector<std::string>(ids.begin(), ids.end());
    }
    matches.push_back(std::move(m));
  }
  WriteJson(root / "facts.json", facts);
  WriteJson(root / "matches.json", matches);

  ordered_json config;
  config["corpus"] = "corpus.jsonl";
  config["queries"] = "queries.json";
  config["timeline"] = "timeline.json";
  config["output"] = "run.jsonl";
  WriteJson(root / "config.json", config);
}

}  // namespace factstream::synthetic
