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

#include "factstream/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"

namespace factstream {
namespace {

namespace fs = std::filesystem;

std::string Resolve(const fs::path& base, const std::string& p) {
  if (p.empty() || fs::path(p).is_absolute()) return p;
  return (base / p).lexically_normal().string();
}

void RequireFile(const std::string& path, const char* what) {
  if (path.empty()) throw Error(std::string("config: no ") + what + " path");
  if (!fs::is_regular_file(path)) {
    throw Error(std::string("config: ") + what + " file not found: " + path);
  }
}

// One pooled document: a unique normalized text and its reranker scores.
struct PoolEntry {
  const Document* doc = nullptr;
  RelevanceRecord record;
  double relevance = 0.0;
};

}  // namespace

RerankerKind ParseRerankerKind(std::string_view name) {
  if (name == "boe") return RerankerKind::kBoe;
  if (name == "external") return RerankerKind::kExternal;
  throw Error("unknown reranker \"" + std::string(name) + "\"");
}

void PipelineConfig::Validate() const {
  retrieval.Validate();
  rerank.Validate(retrieval.k_stage1);
  mmr.Validate();
  if (max_docs < 1) throw Error("config: max_docs must be >= 1");
  if (threads < 1) throw Error("config: threads must be >= 1");
  if (reranker == RerankerKind::kExternal && scores_path.empty()) {
    throw Error("config: reranker=external needs a scores file");
  }
}

PipelineConfig LoadPipelineConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
  if (!j.is_object()) throw Error(path + ": config must be a JSON object");
  const fs::path base = fs::absolute(path).parent_path();
  PipelineConfig c;
  static const std::set<std::string> kKeys = {
      "corpus",   "queries",  "timeline", "scores",   "output",
      "candidates", "tagger", "event",    "k1",       "b",
      "k_stage1", "k_stage2", "fb_docs",  "fb_terms", "expand",
      "max_docs", "lambda",   "reranker", "solver",   "exact_cap",
      "threads",  "verbose"};
  try {
    for (const auto& [key, value] : j.items()) {
      if (!kKeys.contains(key)) throw Error("unknown config key \"" + key + "\"");
    }
    c.corpus_path = Resolve(base, j.value("corpus", ""));
    c.queries_path = Resolve(base, j.value("queries", ""));
    c.timeline_path = Resolve(base, j.value("timeline", ""));
    c.scores_path = Resolve(base, j.value("scores", ""));
    c.output_path = Resolve(base, j.value("output", ""));
    c.candidates_path = Resolve(base, j.value("candidates", ""));
    c.tagger = j.value("tagger", c.tagger);
    if (j.contains("event")) c.event = j["event"].get<std::string>();
    c.retrieval.k1 = j.value("k1", c.retrieval.k1);
    c.retrieval.b = j.value("b", c.retrieval.b);
    c.retrieval.k_stage1 = j.value("k_stage1", c.retrieval.k_stage1);
    c.retrieval.fb_docs = j.value("fb_docs", c.retrieval.fb_docs);
    c.retrieval.fb_terms = j.value("fb_terms", c.retrieval.fb_terms);
    c.retrieval.expand = j.value("expand", c.retrieval.expand);
    c.rerank.k_stage2 = j.value("k_stage2", c.rerank.k_stage2);
    c.max_docs = j.value("max_docs", c.max_docs);
    c.mmr.lambda = j.value("lambda", c.mmr.lambda);
    c.reranker = ParseRerankerKind(j.value("reranker", std::string("boe")));
    c.solver = ParseSolverKind(j.value("solver", std::string("auto")));
    c.exact_cap = j.value("exact_cap", c.exact_cap);
    c.threads = j.value("threads", c.threads);
    c.verbose = j.value("verbose", c.verbose);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
  return c;
}

PipelineInputs LoadInputs(const PipelineConfig& config) {
  config.Validate();
  RequireFile(config.corpus_path, "corpus");
  RequireFile(config.queries_path, "queries");
  RequireFile(config.timeline_path, "timeline");
  PipelineInputs inputs;
  inputs.docs = io::LoadCorpus(config.corpus_path);
  inputs.queries = io::LoadQueries(config.queries_path);
  inputs.timelines = io::LoadTimelines(config.timeline_path);
  if (config.reranker == RerankerKind::kExternal) {
    RequireFile(config.scores_path, "scores");
    inputs.scores = io::LoadScores(config.scores_path);
  }
  return inputs;
}

EventRunner::EventRunner(const PipelineConfig& config,
                         std::vector<Document> docs,
                         std::vector<Query> queries, EventTimeline timeline,
                         const ScoreTable* scores, const EntityTagger& tagger,
                         std::ostream* log)
    : config_(config),
      docs_(std::move(docs)),
      queries_(std::move(queries)),
      timeline_(std::move(timeline)),
      scores_(scores),
      tagger_(tagger),
      log_(log) {
  config_.Validate();
  ValidateQueries(queries_);
  if (config_.reranker == RerankerKind::kExternal && scores_ == nullptr) {
    throw Error("reranker=external but no external scores were loaded");
  }
}

DayResult EventRunner::RunDay(std::size_t index) {
  if (index != next_day_) {
    throw Error("event " + timeline_.event_id() + ": day " +
                std::to_string(index + 1) + " requested before day " +
                std::to_string(next_day_ + 1));
  }
  if (index >= timeline_.size()) {
    throw Error("event " + timeline_.event_id() + " has no day " +
                std::to_string(index + 1));
  }
  ++next_day_;
  const std::string& event = timeline_.event_id();
  const int day = static_cast<int>(index) + 1;

  DayResult result;
  const std::vector<Document> slice = SliceByPeriod(docs_, timeline_, index);
  result.counts.slice_docs = slice.size();
  if (slice.empty()) {
    if (log_) {
      *log_ << "warning: event " << event << " day " << day
            << ": no documents in period\n";
    }
    UpdatePast(&state_, {});
    return result;
  }

  const InvertedIndex inverted = InvertedIndex::Build(slice);
  std::unordered_map<std::string, const Document*> by_id;
  std::map<std::string, std::string, std::less<>> texts;
  for (const auto& d : slice) {
    by_id.emplace(d.doc_id, &d);
    texts.emplace(d.doc_id, d.text);
  }

  // Stage 1 and 2 per query.
  std::vector<Cluster> reranked;
  for (const auto& query : queries_) {
    const Cluster retrieved =
        RetrieveCandidates(inverted, query, config_.retrieval);
    result.counts.retrieved += retrieved.entries.size();
    for (const auto& e : retrieved.entries) {
      result.candidates.push_back({event, day, query.query_id, e.doc_id,
                                   by_id.at(e.doc_id)->text, e.score});
    }
    const Cluster rescored =
        config_.reranker == RerankerKind::kBoe
            ? RerankBoe(retrieved, texts, query.profile, tagger_)
            : InjectExternalScores(retrieved, *scores_);
    reranked.push_back(SelectTop(rescored, config_.rerank));
    result.counts.reranked += reranked.back().entries.size();
  }

  // Pool: one entry per distinct normalized text. The representative is the
  // earliest document (then smallest doc_id); per-query scores of copies
  // merge by max.
  std::map<std::string_view, PoolEntry> by_text;
  for (const auto& cluster : reranked) {
    for (const auto& e : cluster.entries) {
      const Document* doc = by_id.at(e.doc_id);
      auto& entry = by_text[doc->text];
      if (entry.doc == nullptr ||
          std::tie(doc->timestamp, doc->doc_id) <
              std::tie(entry.doc->timestamp, entry.doc->doc_id)) {
        entry.doc = doc;
      }
      auto [it, inserted] =
          entry.record.per_query_scores.emplace(cluster.query_id, e.score);
      if (!inserted) it->second = std::max(it->second, e.score);
    }
  }
  std::vector<PoolEntry> pool;
  pool.reserve(by_text.size());
  for (auto& [text, entry] : by_text) {
    entry.record.doc_id = entry.doc->doc_id;
    entry.relevance = Relevance(entry.record);
    pool.push_back(std::move(entry));
  }
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
    if (a.relevance != b.relevance) return a.relevance > b.relevance;
    return a.doc->doc_id < b.doc->doc_id;
  });
  result.counts.pool = pool.size();
  if (pool.empty()) {
    if (log_) {
      *log_ << "warning: event " << event << " day " << day
            << ": no candidates retrieved\n";
    }
    UpdatePast(&state_, {});
    return result;
  }

  // Stage 3a: concept-coverage selection.
  std::vector<PoolDoc> pool_docs;
  std::vector<std::string> pool_texts;
  IlpProblem problem;
  problem.max_docs = config_.max_docs;
  for (const auto& p : pool) {
    pool_docs.push_back({p.doc->doc_id, p.doc->text});
    pool_texts.push_back(p.doc->text);
    problem.pool.push_back(p.doc->doc_id);
  }
  problem.table = ExtractConcepts(pool_docs, tagger_);
  result.counts.concepts = problem.table.concepts.size();
  const Selection selection =
      Solve(problem, config_.solver, config_.exact_cap);
  result.counts.selected = selection.chosen.size();

  // Stage 3b: relaxed MMR against today's picks and past summaries.
  const std::set<std::string> chosen(selection.chosen.begin(),
                                     selection.chosen.end());
  std::vector<MmrCandidate> candidates;
  for (const auto& p : pool) {
    if (chosen.contains(p.doc->doc_id)) {
      candidates.push_back({p.doc->doc_id, p.doc->text, p.relevance});
    }
  }
  state_.BeginDay(pool_texts);
  const auto ranked = MmrRank(candidates, &state_, config_.mmr);

  std::vector<SummaryItem> summary;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    result.records.push_back({event, day, ranked[i].doc_id, ranked[i].score,
                              static_cast<int>(i) + 1});
    summary.push_back({ranked[i].doc_id, by_id.at(ranked[i].doc_id)->text});
  }
  UpdatePast(&state_, summary);

  if (log_ && config_.verbose) {
    const auto& c = result.counts;
    *log_ << "event " << event << " day " << day << ": docs=" << c.slice_docs
          << " retrieved=" << c.retrieved << " reranked=" << c.reranked
          << " pool=" << c.pool << " concepts=" << c.concepts
          << " selected=" << c.selected << "\n";
  }
  return result;
}

RunOutput RunPipeline(const PipelineConfig& config,
                      const PipelineInputs& inputs, std::ostream* log) {
  config.Validate();
  const auto tagger = MakeTagger(config.tagger);
  const ScoreTable* scores = inputs.scores ? &*inputs.scores : nullptr;

  std::vector<std::string> events;
  for (const auto& [event, timeline] : inputs.timelines) {
    if (config.event && *config.event != event) continue;
    events.push_back(event);
  }
  if (config.event && events.empty()) {
    throw Error("event " + *config.event + " has no timeline");
  }
  for (const auto& event : events) {
    if (!inputs.queries.contains(event)) {
      throw Error("event " + event + " has no queries");
    }
  }

  std::vector<RunOutput> outputs(events.size());
  std::vector<std::ostringstream> logs(events.size());
  std::vector<std::exception_ptr> errors(events.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < events.size(); i = next++) {
      try {
        std::vector<Document> docs;
        for (const auto& d : inputs.docs) {
          if (d.event_id == events[i]) docs.push_back(d);
        }
        EventRunner runner(config, std::move(docs),
                           inputs.queries.at(events[i]),
                           inputs.timelines.at(events[i]), scores, *tagger,
                           &logs[i]);
        for (std::size_t day = 0; day < runner.num_days(); ++day) {
          auto result = runner.RunDay(day);
          auto& out = outputs[i];
          out.records.insert(out.records.end(), result.records.begin(),
                             result.records.end());
          out.candidates.insert(out.candidates.end(),
                                result.candidates.begin(),
                                result.candidates.end());
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(config.threads, std::max<std::size_t>(1, events.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  RunOutput merged;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (log) *log << logs[i].str();
    if (errors[i]) std::rethrow_exception(errors[i]);
    merged.records.insert(merged.records.end(), outputs[i].records.begin(),
                          outputs[i].records.end());
    merged.candidates.insert(merged.candidates.end(),
                             outputs[i].candidates.begin(),
                             outputs[i].candidates.end());
  }
  return merged;
}

}  // namespace factstream
