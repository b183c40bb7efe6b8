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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace factstream::io {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("factstream_io_" + std::to_string(::testing::UnitTest::GetInstance()
                                                    ->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string Write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

TEST(ParseCorpusTest, ReadsAndNormalizes) {
  std::istringstream in(
      R"({"doc_id":"a","event_id":"e","source_type":"twitter","unix_timestamp":5,"text":"RT @x: hi #CampFire"})"
      "\n\n"
      R"({"doc_id":"b","event_id":"e","source_type":"news","unix_timestamp":6,"text":"plain"})"
      "\n");
  const auto docs = ParseCorpus(in, "mem");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].text, "hi camp fire");
  EXPECT_EQ(docs[0].raw_text, "RT @x: hi #CampFire");
}

TEST(ParseCorpusTest, ErrorsCarryLineNumbers) {
  std::istringstream bad(
      R"({"doc_id":"a","event_id":"e","source_type":"twitter","unix_timestamp":5,"text":"x"})"
      "\n"
      R"({"doc_id":"b","event_id":"e","source_type":"fax","unix_timestamp":5,"text":"x"})"
      "\n");
  try {
    ParseCorpus(bad, "c.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("c.jsonl:2"), std::string::npos);
  }
}

TEST(ParseCorpusTest, DuplicateIdWithinEvent) {
  std::istringstream in(
      R"({"doc_id":"a","event_id":"e","source_type":"news","unix_timestamp":5,"text":"x"})"
      "\n"
      R"({"doc_id":"a","event_id":"e","source_type":"news","unix_timestamp":6,"text":"y"})"
      "\n"
      R"({"doc_id":"a","event_id":"f","source_type":"news","unix_timestamp":6,"text":"y"})"
      "\n");
  EXPECT_THROW(ParseCorpus(in, "mem"), Error);
}

TEST(LoadQueriesTest, KeywordsDefaultToIndicativeTerms) {
  TempDir dir;
  const auto path = dir.Write("q.json", R"({"event_id":"e","queries":[
    {"query_id":"q1","text":"Missing?","indicative_terms":["missing"],"entity_types":["NUMBER"]},
    {"query_id":"q2","text":"Roads?","indicative_terms":["road"],"entity_types":[],"keywords":["closed"]}]})");
  const auto queries = LoadQueries(path);
  const auto& qs = queries.at("e");
  ASSERT_EQ(qs.size(), 2u);
  EXPECT_EQ(qs[0].profile.keywords, std::set<std::string>{"missing"});
  EXPECT_EQ(qs[1].profile.keywords, std::set<std::string>{"closed"});
  EXPECT_TRUE(qs[0].profile.expected_entity_types.contains(EntityType::kNumber));
}

TEST(LoadQueriesTest, UnknownEntityType) {
  TempDir dir;
  const auto path = dir.Write("q.json", R"({"event_id":"e","queries":[
    {"query_id":"q1","text":"x","indicative_terms":["x"],"entity_types":["GPE"]}]})");
  EXPECT_THROW(LoadQueries(path), Error);
}

TEST(LoadTimelinesTest, ArrayOfEvents) {
  TempDir dir;
  const auto path = dir.Write("t.json", R"([
    {"event_id":"a","periods":[{"start":1,"end":2},{"start":2,"end":3}]},
    {"event_id":"b","periods":[{"start":5,"end":9}]}])");
  const auto timelines = LoadTimelines(path);
  EXPECT_EQ(timelines.at("a").size(), 2u);
  EXPECT_EQ(timelines.at("b").periods()[0].end, 9);
}

TEST(ParseScoresTest, RejectsNonNumeric) {
  std::istringstream ok(R"({"query_id":"q","doc_id":"d","score":1.5})");
  EXPECT_EQ(*ParseScores(ok, "s").Find("q", "d"), 1.5);
  std::istringstream bad(R"({"query_id":"q","doc_id":"d","score":"high"})");
  EXPECT_THROW(ParseScores(bad, "s"), Error);
}

TEST(RunfileTest, RoundTrip) {
  TempDir dir;
  const std::vector<RunRecord> records = {{"e", 1, "a", 1.25, 1},
                                          {"e", 1, "b", 0.5, 2}};
  std::ostringstream out;
  WriteRunfile(out, records);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
            R"({"event_id":"e","day":1,"doc_id":"a","importance":1.25,"rank":1})");
  const auto back = LoadRunfile(dir.Write("run.jsonl", out.str()));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].doc_id, "b");
  EXPECT_EQ(back[1].rank, 2);
}

TEST(RunfileTest, EmptyWritesNothing) {
  std::ostringstream out;
  WriteRunfile(out, {});
  EXPECT_EQ(out.str(), "");
}

TEST(EvaluateRunTest, CutoffRestrictsMatches) {
  TempDir dir;
  const auto facts = LoadFacts(dir.Write("f.json", R"([
    {"event_id":"e","day":1,"facts":[{"fact_id":"f1","gain":2},{"fact_id":"f2","gain":1},{"fact_id":"f3","gain":1}]}])"));
  const auto matches = LoadMatches(dir.Write("m.json", R"(
    {"event_id":"e","day":1,"matches":{"f1":["a","x"],"f2":["c"]}})"));
  const std::vector<RunRecord> run = {
      {"e", 1, "c", 0.1, 3}, {"e", 1, "a", 0.9, 1}, {"e", 1, "b", 0.5, 2}};
  const auto top2 = EvaluateRun(run, facts, matches, 2);
  ASSERT_EQ(top2.per_day.size(), 1u);
  EXPECT_NEAR(top2.per_day[0].comprehensiveness, 0.5, 1e-12);
  EXPECT_EQ(*top2.per_day[0].redundancy_ratio, 1.0);
  const auto all = EvaluateRun(run, facts, matches, 10);
  EXPECT_NEAR(all.per_day[0].comprehensiveness, 0.75, 1e-12);
  EXPECT_THROW(EvaluateRun(run, facts, matches, 0), Error);
}

TEST(EvaluateRunTest, UnknownFactInMatches) {
  TempDir dir;
  const auto facts = LoadFacts(dir.Write("f.json", R"(
    {"event_id":"e","day":1,"facts":[{"fact_id":"f1","gain":1}]})"));
  const auto matches = LoadMatches(dir.Write("m.json", R"(
    {"event_id":"e","day":1,"matches":{"f9":["a"]}})"));
  EXPECT_THROW(EvaluateRun({}, facts, matches, 5), Error);
}

TEST(MetricsJsonTest, UndefinedRedundancyIsNull) {
  TempDir dir;
  const auto facts = LoadFacts(dir.Write("f.json", R"(
    {"event_id":"e","day":1,"facts":[{"fact_id":"f1","gain":1}]})"));
  const auto metrics = EvaluateRun({}, facts, {}, 5);
  const std::string json = MetricsJson(metrics);
  EXPECT_NE(json.find("\"redundancy_ratio\": null"), std::string::npos);
  const auto path = dir.Write("metrics.json", json);
  const auto comp = LoadComprehensiveness(path);
  EXPECT_EQ(*comp.at({"e", 1}), 0.0);
}

}  // namespace
}  // namespace factstream::io
