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

// Batch command line: run the pipeline, score run files, export trends.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "factstream/evaluate.hpp"
#include "factstream/io.hpp"
#include "factstream/pipeline.hpp"
#include "factstream/synthetic.hpp"

namespace {

using factstream::Error;

void WriteOrPrint(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

// Flag defaults come from the library so --help shows what actually runs.
struct RunOptions {
  std::string config;
  std::string event;
  std::string reranker;
  std::string solver;
  std::string output;
  std::string candidates;
  double lambda = factstream::MmrParams().lambda;
  std::size_t max_docs = factstream::PipelineConfig().max_docs;
  int k_stage1 = factstream::RetrievalParams().k_stage1;
  int k_stage2 = factstream::RerankParams().k_stage2;
  int threads = 1;
  bool verbose = false;
};

int Run(const RunOptions& opt, const CLI::App& cmd) {
  factstream::PipelineConfig config =
      factstream::LoadPipelineConfig(opt.config);
  if (cmd.count("--event")) config.event = opt.event;
  if (cmd.count("--reranker")) {
    config.reranker = factstream::ParseRerankerKind(opt.reranker);
  }
  if (cmd.count("--solver")) {
    config.solver = factstream::ParseSolverKind(opt.solver);
  }
  if (cmd.count("--lambda")) config.mmr.lambda = opt.lambda;
  if (cmd.count("--max-docs")) config.max_docs = opt.max_docs;
  if (cmd.count("--k-stage1")) config.retrieval.k_stage1 = opt.k_stage1;
  if (cmd.count("--k-stage2")) config.rerank.k_stage2 = opt.k_stage2;
  if (cmd.count("--threads")) config.threads = opt.threads;
  if (cmd.count("--output")) config.output_path = opt.output;
  if (cmd.count("--candidates")) config.candidates_path = opt.candidates;
  if (opt.verbose) config.verbose = true;

  const auto inputs = factstream::LoadInputs(config);
  const auto output = factstream::RunPipeline(config, inputs, &std::cerr);

  std::ostringstream run;
  factstream::io::WriteRunfile(run, output.records);
  WriteOrPrint(config.output_path, run.str());
  if (!config.candidates_path.empty()) {
    std::ostringstream candidates;
    factstream::io::WriteCandidates(candidates, output.candidates);
    WriteOrPrint(config.candidates_path, candidates.str());
  }
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal multi-query fact extraction: retrieve, rerank, "
               "select and score crisis stream items per event-day."};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run the pipeline over all events");
  run_cmd->add_option("--config", run.config, "Pipeline config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--event", run.event, "Only process this event");
  run_cmd->add_option("--reranker", run.reranker, "Reranker")
      ->check(CLI::IsMember({"boe", "external"}))
      ->default_str("boe");
  run_cmd->add_option("--solver", run.solver, "Selection solver")
      ->check(CLI::IsMember({"exact", "greedy", "auto"}))
      ->default_str("auto");
  run_cmd->add_option("--lambda", run.lambda, "MMR relevance weight")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  run_cmd->add_option("--max-docs", run.max_docs,
                      "Max documents selected per event-day (L)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("--k-stage1", run.k_stage1,
                      "Retrieval candidates per query")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("--k-stage2", run.k_stage2,
                      "Reranked candidates kept per query")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("--threads", run.threads, "Events processed in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("-o,--output", run.output, "Run file (default stdout)");
  run_cmd->add_option("--candidates", run.candidates,
                      "Also write retrieval candidates (JSONL)");
  run_cmd->add_flag("-v,--verbose", run.verbose, "Log per-stage counts");

  std::string run_file, facts_file, matches_file, metrics_out;
  int cutoff = 20;
  auto* eval_cmd =
      app.add_subcommand("evaluate", "Comprehensiveness and redundancy ratio");
  eval_cmd->add_option("--run", run_file, "Run file")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--facts", facts_file, "facts.json")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--matches", matches_file, "matches.json")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--cutoff", cutoff, "Rank cut-off k")
      ->required()
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("-o,--output", metrics_out,
                       "metrics.json (default stdout)");

  std::string metrics_file, trend_out;
  auto* trend_cmd =
      app.add_subcommand("trend", "Per-day comprehensiveness as CSV");
  trend_cmd->add_option("--metrics", metrics_file, "metrics.json")
      ->required()
      ->check(CLI::ExistingFile);
  trend_cmd->add_option("-o,--output", trend_out, "trend.csv")->required();

  std::uint64_t seed = 1;
  std::string synth_dir;
  int items_per_day = 200;
  auto* synth_cmd = app.add_subcommand(
      "synth", "Write a synthetic event with planted facts and oracle matches");
  synth_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
  synth_cmd->add_option("--items-per-day", items_per_day, "Items per day")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--out", synth_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return Run(run, *run_cmd);
    if (*eval_cmd) {
      const auto metrics = factstream::io::EvaluateRun(
          factstream::io::LoadRunfile(run_file),
          factstream::io::LoadFacts(facts_file),
          factstream::io::LoadMatches(matches_file), cutoff);
      for (const auto& w : metrics.comprehensiveness.warnings) {
        std::cerr << "warning: " << w << "\n";
      }
      WriteOrPrint(metrics_out, factstream::io::MetricsJson(metrics));
      return EXIT_SUCCESS;
    }
    if (*trend_cmd) {
      const auto per_day = factstream::io::LoadComprehensiveness(metrics_file);
      WriteOrPrint(trend_out,
                   factstream::TrendCsv(factstream::TrendSeries(per_day)));
      return EXIT_SUCCESS;
    }
    if (*synth_cmd) {
      factstream::synthetic::GeneratorOptions options;
      options.items_per_day = items_per_day;
      factstream::synthetic::WriteEventFiles(
          factstream::synthetic::GenerateEvent(seed, options), synth_dir);
      return EXIT_SUCCESS;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return EXIT_FAILURE;
}
