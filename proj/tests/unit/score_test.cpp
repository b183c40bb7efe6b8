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

#include "factstream/score.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace factstream {
namespace {

TEST(RelevanceTest, Examples) {
  EXPECT_NEAR(Relevance({"d", {{"q1", 0.9}, {"q2", 0.7}}}), 1.6, 1e-12);
  EXPECT_EQ(Relevance({"d", {{"q1", 0.5}}}), 0.5);
  EXPECT_EQ(Relevance({"d", {{"a", 1.0}, {"b", 1.0}, {"c", 1.0}}}), 3.0);
  EXPECT_THROW(Relevance({"d", {}}), Error);
}

TfidfModel Model(std::vector<std::string> texts) {
  return TfidfModel(std::span<const std::string>(texts));
}

TEST(CosineTest, IdenticalAndDisjoint) {
  const auto model = Model({"fire near camp", "flood downtown", "x y"});
  EXPECT_EQ(TfidfRedundancy("fire near camp", "fire near camp", model), 1.0);
  EXPECT_EQ(TfidfRedundancy("fire near camp", "flood downtown", model), 0.0);
  EXPECT_EQ(TfidfRedundancy("", "fire", model), 0.0);
}

TEST(CosineTest, ThreeDocHandComputation) {
  const auto model = Model({"fire camp", "fire road", "flood road road"});
  // N = 3; df(fire) = df(road) = 2, df(camp) = 1.
  const double i_fire = std::log(1.0 + 3.0 / 2.0);
  const double i_camp = std::log(1.0 + 3.0);
  const double i_road = i_fire;
  const double expected =
      (i_fire * i_fire) /
      (std::sqrt(i_fire * i_fire + i_camp * i_camp) *
       std::sqrt(i_fire * i_fire + i_road * i_road));
  EXPECT_NEAR(TfidfRedundancy("fire camp", "fire road", model), expected, 1e-12);
  const double i_flood = std::log(1.0 + 3.0);
  const double expected_23 =
      (i_road * 2.0 * i_road) /
      (std::sqrt(i_fire * i_fire + i_road * i_road) *
       std::sqrt(i_flood * i_flood + 4.0 * i_road * i_road));
  EXPECT_NEAR(TfidfRedundancy("fire road", "flood road road", model),
              expected_23, 1e-12);
}

TEST(CosineTest, BoundedAndSymmetric) {
  const std::vector<std::string> words = {"fire", "camp", "road", "flood",
                                          "shelter", "closed"};
  std::mt19937 gen(9);
  auto sentence = [&] {
    std::string s;
    for (int i = 0; i < 1 + static_cast<int>(gen() % 6); ++i) {
      s += words[gen() % words.size()] + " ";
    }
    return s;
  };
  std::vector<std::string> pool;
  for (int i = 0; i < 20; ++i) pool.push_back(sentence());
  const TfidfModel model{std::span<const std::string>(pool)};
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const double ab = TfidfRedundancy(a, b, model);
      EXPECT_GE(ab, 0.0);
      EXPECT_LE(ab, 1.0);
      EXPECT_NEAR(ab, TfidfRedundancy(b, a, model), 1e-15);
    }
  }
}

SummaryState StateFor(const std::vector<MmrCandidate>& candidates) {
  SummaryState state;
  std::vector<std::string> texts;
  for (const auto& c : candidates) texts.push_back(c.text);
  state.BeginDay(texts);
  return state;
}

TEST(MmrRankTest, ScoreFormula) {
  // 0.8 * 2.0 - 0.2 * 0.25 = 1.55
  const double score = 0.8 * 2.0 - (1.0 - 0.8) * 0.25;
  EXPECT_NEAR(score, 1.55, 1e-12);
}

TEST(MmrRankTest, DuplicateOfPickedDoc) {
  const std::vector<MmrCandidate> candidates = {
      {"a", "fire near the camp", 1.5}, {"b", "fire near the camp", 1.0}};
  auto state = StateFor(candidates);
  const auto ranked = MmrRank(candidates, &state, MmrParams{0.8});
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked[0].doc_id, "a");
  EXPECT_EQ(ranked[0].score, 0.8 * 1.5);
  EXPECT_EQ(ranked[1].score, 0.8 * 1.0 - (1.0 - 0.8) * 1.0);
  EXPECT_NEAR(ranked[1].score, 0.6, 1e-12);
}

TEST(MmrRankTest, LambdaOneIsRelevanceOrder) {
  std::mt19937 gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MmrCandidate> candidates;
    for (int i = 0; i < 15; ++i) {
      candidates.push_back({"d" + std::to_string(i),
                            "fire " + std::to_string(gen() % 4),
                            static_cast<double>(gen() % 7)});
    }
    auto state = StateFor(candidates);
    const auto ranked = MmrRank(candidates, &state, MmrParams{1.0});
    auto expected = candidates;
    std::sort(expected.begin(), expected.end(), [](const auto& x, const auto& y) {
      if (x.relevance != y.relevance) return x.relevance > y.relevance;
      return x.doc_id < y.doc_id;
    });
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(ranked[i].doc_id, expected[i].doc_id);
    }
  }
}

TEST(MmrRankTest, PicksAppendToSelection) {
  const std::vector<MmrCandidate> candidates = {{"a", "x", 1}, {"b", "y", 2}};
  auto state = StateFor(candidates);
  MmrRank(candidates, &state, MmrParams());
  ASSERT_EQ(state.s_sel.size(), 2u);
  EXPECT_EQ(state.s_sel[0].doc_id, "b");
}

TEST(MmrRankTest, PastSummaryPenalizes) {
  const std::vector<MmrCandidate> candidates = {{"new", "road closed", 1.0}};
  auto control = StateFor(candidates);
  auto replay = StateFor(candidates);
  replay.s_past.push_back({"old", "road closed"});
  const double base = MmrRank(candidates, &control, MmrParams())[0].score;
  const double dup = MmrRank(candidates, &replay, MmrParams())[0].score;
  EXPECT_EQ(base, 0.8 * 1.0);
  EXPECT_EQ(dup, 0.8 * 1.0 - (1.0 - 0.8) * 1.0);
}

TEST(MmrRankTest, InvalidLambda) {
  SummaryState state;
  EXPECT_THROW(MmrRank({}, &state, MmrParams{1.5}), Error);
  EXPECT_THROW(MmrRank({}, &state, MmrParams{-0.1}), Error);
  EXPECT_EQ(MmrParams().lambda, 0.8);
}

TEST(UpdatePastTest, Accumulates) {
  SummaryState state;
  const std::vector<SummaryItem> day1 = {{"a", "1"}, {"b", "2"}, {"c", "3"}};
  UpdatePast(&state, day1);
  EXPECT_EQ(state.s_past.size(), 3u);
  const std::vector<SummaryItem> day2 = {
      {"d", "4"}, {"e", "5"}, {"f", "6"}, {"g", "7"}};
  UpdatePast(&state, day2);
  EXPECT_EQ(state.s_past.size(), 7u);
}

TEST(UpdatePastTest, SetSemanticsByDocId) {
  SummaryState state;
  state.s_sel.push_back({"x", "t"});
  const std::vector<SummaryItem> day1 = {{"a", "same"}, {"a", "same"}};
  UpdatePast(&state, day1);
  const std::vector<SummaryItem> day2 = {{"b", "same"}};
  UpdatePast(&state, day2);
  EXPECT_EQ(state.s_past.size(), 2u);
  EXPECT_TRUE(state.s_sel.empty());
}

}  // namespace
}  // namespace factstream
