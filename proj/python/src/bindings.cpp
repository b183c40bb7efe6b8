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

// Python bindings over the core stages. Values cross the boundary as plain
// tuples, lists and dicts so callers never see library structs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "factstream/corpus.hpp"
#include "factstream/entities.hpp"
#include "factstream/evaluate.hpp"
#include "factstream/io.hpp"
#include "factstream/pipeline.hpp"
#include "factstream/retrieve.hpp"
#include "factstream/score.hpp"
#include "factstream/select.hpp"
#include "factstream/synthetic.hpp"

namespace py = pybind11;
namespace fs = factstream;

namespace {

using DocPair = std::pair<std::string, std::string>;
using Scored = std::vector<std::pair<std::string, double>>;

std::vector<std::tuple<std::string, std::string, std::size_t, std::size_t>>
TagEntities(const std::string& text) {
  static const fs::RuleTagger tagger;
  std::vector<std::tuple<std::string, std::string, std::size_t, std::size_t>>
      out;
  for (const auto& m : fs::TagEntities(text, tagger)) {
    out.emplace_back(m.surface, std::string(fs::EntityTypeName(m.etype)),
                     m.start, m.end);
  }
  return out;
}

Scored Retrieve(const std::vector<DocPair>& docs, const std::string& query,
                const std::vector<std::string>& indicative_terms, int k,
                bool expand, double k1, double b) {
  std::vector<fs::Document> corpus;
  corpus.reserve(docs.size());
  std::int64_t ts = 1;
  for (const auto& [id, text] : docs) {
    corpus.push_back(fs::MakeDocument(id, "py", fs::SourceType::kNews, ts++, text));
  }
  fs::Query q;
  q.query_id = "q";
  q.text = query;
  q.indicative_terms = indicative_terms;
  const auto index = fs::InvertedIndex::Build(corpus);
  const auto params = fs::MakeRetrievalParams(
      k1, b, k, fs::RetrievalParams().fb_docs, fs::RetrievalParams().fb_terms,
      expand);
  Scored out;
  for (const auto& e : fs::RetrieveCandidates(index, q, params).entries) {
    out.emplace_back(e.doc_id, e.score);
  }
  return out;
}

std::pair<std::vector<std::string>, double> Solve(
    const std::vector<double>& weights,
    const std::vector<std::vector<int>>& occurrence,
    const std::vector<std::string>& pool, std::size_t max_docs,
    const std::string& method) {
  if (weights.size() != occurrence.size()) {
    throw fs::Error("weights and occurrence rows differ in length");
  }
  fs::IlpProblem problem;
  problem.max_docs = max_docs;
  problem.pool = pool;
  problem.table.num_docs = pool.size();
  for (std::size_t c = 0; c < weights.size(); ++c) {
    if (occurrence[c].size() != pool.size()) {
      throw fs::Error("occurrence row " + std::to_string(c) +
                      " does not match the pool size");
    }
    problem.table.concepts.push_back(
        {"c" + std::to_string(c), fs::EntityType::kMisc, weights[c]});
    problem.table.occurrence.emplace_back(occurrence[c].begin(),
                                          occurrence[c].end());
  }
  const auto sel = fs::Solve(problem, fs::ParseSolverKind(method));
  return {sel.chosen, sel.objective};
}

Scored MmrRank(const std::vector<std::tuple<std::string, std::string, double>>&
                   candidates,
               const std::vector<DocPair>& past, double lambda) {
  std::vector<fs::MmrCandidate> cands;
  std::vector<std::string> texts;
  for (const auto& [id, text, rel] : candidates) {
    cands.push_back({id, text, rel});
    texts.push_back(text);
  }
  fs::SummaryState state;
  state.BeginDay(texts);
  for (const auto& [id, text] : past) state.s_past.push_back({id, text});
  Scored out;
  for (const auto& s : fs::MmrRank(cands, &state, fs::MmrParams{lambda})) {
    out.emplace_back(s.doc_id, s.score);
  }
  return out;
}

fs::FactList Facts(const std::map<std::string, double>& gains) {
  fs::FactList list;
  for (const auto& [id, gain] : gains) list.facts.push_back({id, gain});
  return list;
}

fs::MatchSet Matches(
    const std::map<std::string, std::set<std::string>>& matches) {
  return fs::MatchSet{matches};
}

std::vector<py::dict> RunPipeline(const std::string& config_path,
                                  const py::dict& overrides) {
  auto config = fs::LoadPipelineConfig(config_path);
  for (const auto& [key, value] : overrides) {
    const auto k = py::cast<std::string>(key);
    if (k == "event") config.event = py::cast<std::string>(value);
    else if (k == "reranker") config.reranker = fs::ParseRerankerKind(py::cast<std::string>(value));
    else if (k == "solver") config.solver = fs::ParseSolverKind(py::cast<std::string>(value));
    else if (k == "lambda") config.mmr.lambda = py::cast<double>(value);
    else if (k == "max_docs") config.max_docs = py::cast<std::size_t>(value);
    else if (k == "k_stage1") config.retrieval.k_stage1 = py::cast<int>(value);
    else if (k == "k_stage2") config.rerank.k_stage2 = py::cast<int>(value);
    else if (k == "threads") config.threads = py::cast<int>(value);
    else throw fs::Error("unknown override: " + k);
  }
  config.Validate();
  fs::RunOutput output;
  {
    py::gil_scoped_release release;
    output = fs::RunPipeline(config, fs::LoadInputs(config));
  }
  std::vector<py::dict> rows;
  for (const auto& r : output.records) {
    py::dict row;
    row["event_id"] = r.event_id;
    row["day"] = r.day;
    row["doc_id"] = r.doc_id;
    row["importance"] = r.importance;
    row["rank"] = r.rank;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string EvaluateJson(const std::string& run, const std::string& facts,
                         const std::string& matches, int cutoff) {
  return fs::io::MetricsJson(fs::io::EvaluateRun(
      fs::io::LoadRunfile(run), fs::io::LoadFacts(facts),
      fs::io::LoadMatches(matches), cutoff));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Temporal multi-query fact extraction over crisis streams.";
  py::register_exception<fs::Error>(m, "FactstreamError", PyExc_ValueError);

  m.def("normalize_text", [](const std::string& raw, const std::string& source) {
        return fs::NormalizeText(raw, fs::ParseSourceType(source));
      }, py::arg("raw"), py::arg("source") = "news");
  m.def("segment_hashtag", [](const std::string& tag) { return fs::SegmentHashtag(tag); },
        py::arg("tag"));
  m.def("tag_entities", &TagEntities, py::arg("text"),
        "Rule tagger mentions as (surface, type, start, end) byte spans.");
  m.def("bm25_idf", &fs::Bm25Idf, py::arg("num_docs"), py::arg("doc_freq"));
  m.def("retrieve", &Retrieve, py::arg("docs"), py::arg("query"),
        py::arg("indicative_terms") = std::vector<std::string>{},
        py::arg("k") = fs::RetrievalParams().k_stage1,
        py::arg("expand") = true, py::arg("k1") = fs::RetrievalParams().k1,
        py::arg("b") = fs::RetrievalParams().b,
        "BM25 over (doc_id, text) pairs with optional Bo1 expansion.");
  m.def("solve", &Solve, py::arg("weights"), py::arg("occurrence"),
        py::arg("pool"), py::arg("max_docs") = fs::PipelineConfig().max_docs,
        py::arg("method") = "auto",
        "Concept coverage selection. Returns (chosen doc ids, objective).");
  m.def("relevance", [](const std::map<std::string, double>& per_query) {
        return fs::Relevance({"", per_query});
      }, py::arg("per_query_scores"));
  m.def("mmr_rank", &MmrRank, py::arg("candidates"),
        py::arg("past") = std::vector<DocPair>{},
        py::arg("lambda_") = fs::MmrParams().lambda,
        "Ranks (doc_id, text, relevance) triples against earlier summaries.");
  m.def("comprehensiveness", [](const std::map<std::string, double>& gains,
                                const std::map<std::string, std::set<std::string>>& matches) {
        return fs::Comprehensiveness(Facts(gains), Matches(matches));
      }, py::arg("gains"), py::arg("matches"));
  m.def("redundancy_ratio", [](const std::map<std::string, double>& gains,
                               const std::map<std::string, std::set<std::string>>& matches) {
        return fs::RedundancyRatio(Facts(gains), Matches(matches));
      }, py::arg("gains"), py::arg("matches"));
  m.def("run_pipeline", &RunPipeline, py::arg("config"),
        py::arg("overrides") = py::dict());
  m.def("evaluate_json", &EvaluateJson, py::arg("run"), py::arg("facts"),
        py::arg("matches"), py::arg("cutoff"));
  m.def("synthesize", [](std::uint64_t seed, const std::string& out, int items_per_day) {
        fs::synthetic::GeneratorOptions options;
        options.items_per_day = items_per_day;
        fs::synthetic::WriteEventFiles(fs::synthetic::GenerateEvent(seed, options), out);
      }, py::arg("seed"), py::arg("out"), py::arg("items_per_day") = 200);
}
