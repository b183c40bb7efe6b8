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

#include "factstream/select.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

namespace factstream {
namespace {

using ::testing::ElementsAre;

// cover[d] lists concept indices of doc d.
IlpProblem MakeProblem(const std::vector<double>& weights,
                       const std::vector<std::vector<std::size_t>>& cover,
                       std::size_t max_docs) {
  IlpProblem p;
  p.max_docs = max_docs;
  p.table.num_docs = cover.size();
  for (std::size_t c = 0; c < weights.size(); ++c) {
    p.table.concepts.push_back(
        {"c" + std::to_string(c + 1), EntityType::kMisc, weights[c]});
    p.table.occurrence.emplace_back(cover.size(), 0);
  }
  for (std::size_t d = 0; d < cover.size(); ++d) {
    p.pool.push_back("d" + std::to_string(d + 1));
    for (std::size_t c : cover[d]) p.table.occurrence[c][d] = 1;
  }
  return p;
}

IlpProblem ThreeDocs(std::size_t max_docs) {
  return MakeProblem({3, 2, 2, 1}, {{0, 1}, {1, 2}, {3}}, max_docs);
}

TEST(SolveExactTest, WorkedExample) {
  const auto s = SolveExact(ThreeDocs(2));
  EXPECT_THAT(s.chosen, ElementsAre("d1", "d2"));
  EXPECT_EQ(s.objective, 7.0);
}

TEST(SolveExactTest, SlackBudgetTakesAll) {
  const auto s = SolveExact(ThreeDocs(5));
  EXPECT_THAT(s.chosen, ElementsAre("d1", "d2", "d3"));
  EXPECT_EQ(s.objective, 8.0);
}

TEST(SolveExactTest, SingleDocBudget) {
  const auto s = SolveExact(ThreeDocs(1));
  EXPECT_THAT(s.chosen, ElementsAre("d1"));
  EXPECT_EQ(s.objective, 5.0);
}

TEST(SolveExactTest, TiesGoToSmallestIds) {
  const auto p = MakeProblem({1}, {{0}, {0}, {0}, {0}}, 2);
  const auto s = SolveExact(p);
  EXPECT_THAT(s.chosen, ElementsAre("d1", "d2"));
  EXPECT_EQ(s.objective, 1.0);
}

TEST(SolveExactTest, OverCapDirectsToGreedy) {
  std::vector<std::vector<std::size_t>> cover(30, {0});
  const auto p = MakeProblem({1}, cover, 3);
  try {
    SolveExact(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("greedy"), std::string::npos);
  }
  EXPECT_NO_THROW(Solve(p, SolverKind::kAuto));
}

TEST(SolveExactTest, MatchesEnumerationOnRandomInstances) {
  std::mt19937 gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 14;
    const std::size_t m = 1 + gen() % 10;
    const std::size_t L = 1 + gen() % 5;
    std::vector<double> w(m);
    for (auto& x : w) x = static_cast<double>(1 + gen() % 6);
    std::vector<std::vector<std::size_t>> cover(n);
    for (auto& row : cover) {
      for (std::size_t c = 0; c < m; ++c) {
        if (gen() % 3 == 0) row.push_back(c);
      }
    }
    const auto p = MakeProblem(w, cover, L);
    double best = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > L) continue;
      std::vector<std::size_t> cols;
      for (std::size_t d = 0; d < n; ++d) {
        if (mask >> d & 1) cols.push_back(d);
      }
      best = std::max(best, CoveredWeight(p.table, cols));
    }
    const auto s = SolveExact(p);
    EXPECT_EQ(s.objective, best);
    EXPECT_EQ(s.chosen.size(), std::min(L, n));
  }
}

TEST(SolveGreedyTest, WorkedExample) {
  const auto s = SolveGreedy(ThreeDocs(2));
  EXPECT_THAT(s.chosen, ElementsAre("d1", "d2"));
  EXPECT_EQ(s.objective, 7.0);
}

TEST(SolveGreedyTest, StopsAtZeroGain) {
  const auto s = SolveGreedy(MakeProblem({4}, {{0}, {0}, {0}}, 3));
  EXPECT_THAT(s.chosen, ElementsAre("d1"));
}

TEST(SolveGreedyTest, EmptyTableFallsBackToPoolOrder) {
  IlpProblem p;
  p.pool = {"z", "a", "m"};
  p.table.num_docs = 3;
  p.max_docs = 2;
  EXPECT_THAT(SolveGreedy(p).chosen, ElementsAre("a", "z"));
  EXPECT_THAT(SolveExact(p).chosen, ElementsAre("a", "z"));
  EXPECT_EQ(SolveGreedy(p).objective, 0.0);
}

TEST(SolveTest, InvalidProblems) {
  IlpProblem p = ThreeDocs(0);
  EXPECT_THROW(SolveGreedy(p), Error);
  p = ThreeDocs(2);
  p.pool.pop_back();
  EXPECT_THROW(SolveExact(p), Error);
  EXPECT_THROW(ParseSolverKind("cplex"), Error);
}

TEST(ExtractConceptsTest, CountsMentionsAndDocs) {
  const RuleTagger tagger;
  const std::vector<PoolDoc> pool = {
      {"a", "Pacifica and Pacifica again"}, {"b", "near Pacifica"}, {"c", "x"}};
  const auto table = ExtractConcepts(pool, tagger);
  ASSERT_EQ(table.concepts.size(), 1u);
  EXPECT_EQ(table.concepts[0].surface, "pacifica");
  EXPECT_EQ(table.concepts[0].weight, 3.0);
  EXPECT_THAT(table.occurrence[0], ElementsAre(1, 1, 0));
}

TEST(ExtractConceptsTest, SameSurfaceDifferentTypes) {
  class Fixed : public EntityTagger {
   public:
    std::vector<EntityMention> Tag(std::string_view doc_id,
                                   std::string_view) const override {
      if (doc_id == "a") return {{"Paradise", EntityType::kLocation, 0, 8}};
      return {{"Paradise", EntityType::kMisc, 0, 8}};
    }
  } tagger;
  const std::vector<PoolDoc> pool = {{"a", "Paradise"}, {"b", "Paradise"}};
  EXPECT_EQ(ExtractConcepts(pool, tagger).concepts.size(), 2u);
}

TEST(ExtractConceptsTest, NoEntities) {
  const RuleTagger tagger;
  const std::vector<PoolDoc> pool = {{"a", "nothing here"}};
  const auto table = ExtractConcepts(pool, tagger);
  EXPECT_TRUE(table.concepts.empty());
  EXPECT_EQ(table.num_docs, 1u);
}

}  // namespace
}  // namespace factstream
