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

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "factstream/synthetic.hpp"

namespace factstream {
namespace {

namespace fs = std::filesystem;

fs::path ScratchDir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("factstream_pipeline_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

PipelineInputs InputsFor(const std::vector<synthetic::SyntheticEvent>& events) {
  PipelineInputs inputs;
  for (const auto& e : events) {
    inputs.docs.insert(inputs.docs.end(), e.docs.begin(), e.docs.end());
    inputs.queries[e.event_id] = e.queries;
    inputs.timelines[e.event_id] = e.timeline;
  }
  return inputs;
}

synthetic::SyntheticEvent SmallEvent(std::uint64_t seed) {
  synthetic::GeneratorOptions options;
  options.items_per_day = 80;
  return synthetic::GenerateEvent(seed, options);
}

std::string RunfileText(const RunOutput& out) {
  std::ostringstream s;
  io::WriteRunfile(s, out.records);
  return s.str();
}

TEST(PipelineTest, DayOneEmitsBoundedPositiveRecords) {
  const auto event = SmallEvent(1);
  const PipelineConfig config;
  const RuleTagger tagger;
  EventRunner runner(config, event.docs, event.queries, event.timeline,
                     nullptr, tagger);
  const auto day1 = runner.RunDay(0);
  EXPECT_GT(day1.records.size(), 0u);
  EXPECT_LE(day1.records.size(), config.max_docs);
  for (std::size_t i = 0; i < day1.records.size(); ++i) {
    EXPECT_EQ(day1.records[i].rank, static_cast<int>(i) + 1);
    EXPECT_EQ(day1.records[i].day, 1);
  }
  EXPECT_EQ(runner.state().s_past.size(), day1.records.size());
}

TEST(PipelineTest, MaxDocsCapsOutput) {
  const auto event = SmallEvent(2);
  PipelineConfig config;
  config.max_docs = 5;
  const RuleTagger tagger;
  EventRunner runner(config, event.docs, event.queries, event.timeline,
                     nullptr, tagger);
  for (std::size_t d = 0; d < runner.num_days(); ++d) {
    EXPECT_LE(runner.RunDay(d).records.size(), 5u);
  }
}

TEST(PipelineTest, DaysRunInOrder) {
  const auto event = SmallEvent(1);
  const RuleTagger tagger;
  EventRunner runner(PipelineConfig(), event.docs, event.queries,
                     event.timeline, nullptr, tagger);
  EXPECT_THROW(runner.RunDay(1), Error);
  runner.RunDay(0);
  EXPECT_THROW(runner.RunDay(0), Error);
}

TEST(PipelineTest, EmptyDayWarnsAndEmitsNothing) {
  auto event = SmallEvent(1);
  std::vector<Period> periods = event.timeline.periods();
  periods.push_back({periods.back().end + 10, periods.back().end + 20});
  const EventTimeline timeline(event.event_id, periods);
  const RuleTagger tagger;
  std::ostringstream log;
  EventRunner runner(PipelineConfig(), event.docs, event.queries, timeline,
                     nullptr, tagger, &log);
  for (std::size_t d = 0; d + 1 < runner.num_days(); ++d) runner.RunDay(d);
  EXPECT_TRUE(runner.RunDay(runner.num_days() - 1).records.empty());
  EXPECT_NE(log.str().find("warning"), std::string::npos);
}

TEST(PipelineTest, DeterministicAcrossRunsAndThreads) {
  const auto inputs = InputsFor({SmallEvent(1), SmallEvent(2), SmallEvent(3)});
  PipelineConfig config;
  const std::string one = RunfileText(RunPipeline(config, inputs));
  EXPECT_EQ(RunfileText(RunPipeline(config, inputs)), one);
  config.threads = 4;
  EXPECT_EQ(RunfileText(RunPipeline(config, inputs)), one);
}

TEST(PipelineTest, NoDuplicateTextsInRun) {
  const auto event = SmallEvent(4);
  const auto out = RunPipeline(PipelineConfig(), InputsFor({event}));
  std::map<std::string, std::string> text;
  for (const auto& d : event.docs) text[d.doc_id] = d.text;
  std::set<std::pair<int, std::string>> seen;
  for (const auto& r : out.records) {
    EXPECT_TRUE(seen.insert({r.day, text.at(r.doc_id)}).second) << r.doc_id;
  }
}

TEST(PipelineTest, EventFilter) {
  const auto inputs = InputsFor({SmallEvent(1), SmallEvent(2)});
  PipelineConfig config;
  config.event = "synth2";
  for (const auto& r : RunPipeline(config, inputs).records) {
    EXPECT_EQ(r.event_id, "synth2");
  }
  config.event = "nope";
  EXPECT_THROW(RunPipeline(config, inputs), Error);
}

TEST(PipelineTest, ExternalScoresDriveRanking) {
  const auto event = SmallEvent(5);
  auto inputs = InputsFor({event});
  PipelineConfig config;
  config.reranker = RerankerKind::kExternal;
  config.scores_path = "in-memory";
  ScoreTable scores;
  for (const auto& q : event.queries) {
    for (const auto& d : event.docs) {
      scores.Set(q.query_id, d.doc_id,
                 static_cast<double>(std::hash<std::string>{}(q.query_id + d.doc_id) % 1000) /
                     1000.0);
    }
  }
  inputs.scores = scores;
  EXPECT_FALSE(RunPipeline(config, inputs).records.empty());
  inputs.scores.reset();
  EXPECT_THROW(RunPipeline(config, inputs), Error);
}

TEST(PipelineConfigTest, ExternalWithoutScoresFileFailsAtStartup) {
  PipelineConfig config;
  config.reranker = RerankerKind::kExternal;
  EXPECT_THROW(config.Validate(), Error);
}

TEST(PipelineConfigTest, Defaults) {
  const PipelineConfig config;
  EXPECT_EQ(config.retrieval.k_stage1, 100);
  EXPECT_EQ(config.rerank.k_stage2, 25);
  EXPECT_EQ(config.max_docs, 150u);
  EXPECT_EQ(config.mmr.lambda, 0.8);
}

TEST(PipelineConfigTest, LoadResolvesPathsAndRejectsUnknownKeys) {
  const auto dir = ScratchDir("config");
  std::ofstream(dir / "c.json") << R"({"corpus":"x.jsonl","lambda":0.5,"solver":"greedy"})";
  const auto config = LoadPipelineConfig((dir / "c.json").string());
  EXPECT_EQ(config.corpus_path, (dir / "x.jsonl").string());
  EXPECT_EQ(config.mmr.lambda, 0.5);
  EXPECT_EQ(config.solver, SolverKind::kGreedy);
  std::ofstream(dir / "bad.json") << R"({"lamda":0.5})";
  EXPECT_THROW(LoadPipelineConfig((dir / "bad.json").string()), Error);
  EXPECT_THROW(LoadInputs(config), Error);  // files do not exist
  fs::remove_all(dir);
}

// CLI round trips.

struct CommandResult {
  int status = 0;
  std::string output;
};

CommandResult Shell(const std::string& args) {
  const std::string cmd = std::string(FACTSTREAM_CLI) + " " + args + " 2>&1";
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliTest, HelpShowsDefaults) {
  const auto r = Shell("run --help");
  EXPECT_EQ(r.status, 0);
  for (const char* v : {"100", "25", "150", "0.8"}) {
    EXPECT_NE(r.output.find(v), std::string::npos) << v;
  }
}

TEST(CliTest, SynthRunEvaluateTrend) {
  const auto dir = ScratchDir("cli");
  const std::string d = dir.string();
  ASSERT_EQ(Shell("synth --seed 3 --items-per-day 60 --out " + d).status, 0);
  ASSERT_EQ(Shell("run --config " + d + "/config.json").status, 0);
  const std::string first = ReadFile(dir / "run.jsonl");
  EXPECT_FALSE(first.empty());
  ASSERT_EQ(Shell("run --config " + d + "/config.json --threads 3 -o " + d +
                  "/run2.jsonl")
                .status,
            0);
  EXPECT_EQ(ReadFile(dir / "run2.jsonl"), first);
  ASSERT_EQ(Shell("evaluate --run " + d + "/run.jsonl --facts " + d +
                  "/facts.json --matches " + d + "/matches.json --cutoff 20 -o " +
                  d + "/metrics.json")
                .status,
            0);
  ASSERT_EQ(Shell("trend --metrics " + d + "/metrics.json -o " + d + "/trend.csv")
                .status,
            0);
  const std::string csv = ReadFile(dir / "trend.csv");
  EXPECT_EQ(csv.rfind("event,day_index,value\n", 0), 0u);
  EXPECT_NE(csv.find("synth3,3,"), std::string::npos);
  fs::remove_all(dir);
}

TEST(CliTest, ContractErrorsExitNonzero) {
  const auto dir = ScratchDir("cli_err");
  const std::string d = dir.string();
  ASSERT_EQ(Shell("synth --seed 1 --items-per-day 20 --out " + d).status, 0);
  const auto r = Shell("run --config " + d + "/config.json --reranker external");
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.output.find("scores"), std::string::npos);
  EXPECT_NE(Shell("run --config " + d + "/config.json --lambda 2").status, 0);
  EXPECT_NE(Shell("evaluate --run " + d + "/nope --facts x --matches y --cutoff 3")
                .status,
            0);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace factstream
