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

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

#include "factstream/text.hpp"

namespace factstream {
namespace {

std::vector<std::vector<std::size_t>> ConceptsByDoc(const ConceptTable& table) {
  std::vector<std::vector<std::size_t>> by_doc(table.num_docs);
  for (std::size_t c = 0; c < table.concepts.size(); ++c) {
    for (std::size_t d = 0; d < table.num_docs; ++d) {
      if (table.occurrence[c][d]) by_doc[d].push_back(c);
    }
  }
  return by_doc;
}

// Pool column indices ordered by doc_id.
std::vector<std::size_t> IdOrder(const IlpProblem& problem) {
  std::vector<std::size_t> order(problem.pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return problem.pool[a] < problem.pool[b];
  });
  return order;
}

Selection MakeSelection(const IlpProblem& problem,
                        const std::vector<std::size_t>& columns) {
  Selection s;
  for (std::size_t c : columns) s.chosen.push_back(problem.pool[c]);
  std::sort(s.chosen.begin(), s.chosen.end());
  s.objective = CoveredWeight(problem.table, columns);
  return s;
}

void CheckProblem(const IlpProblem& problem) {
  if (problem.max_docs < 1) throw Error("ILP: max_docs must be >= 1");
  if (problem.pool.empty()) throw Error("ILP: empty pool");
  if (problem.table.num_docs != problem.pool.size()) {
    throw Error("ILP: concept table and pool disagree on document count");
  }
}

Selection PoolOrderFallback(const IlpProblem& problem) {
  const std::size_t k = std::min(problem.max_docs, problem.pool.size());
  std::vector<std::size_t> columns(k);
  std::iota(columns.begin(), columns.end(), 0);
  return MakeSelection(problem, columns);
}

class BranchAndBound {
 public:
  BranchAndBound(const IlpProblem& problem, std::size_t k)
      : problem_(problem),
        order_(IdOrder(problem)),
        by_doc_(ConceptsByDoc(problem.table)),
        k_(k),
        cover_count_(problem.table.concepts.size(), 0) {}

  std::vector<std::size_t> Run() {
    Visit(0, 0.0);
    return best_;
  }

 private:
  double Gain(std::size_t column) const {
    double gain = 0.0;
    for (std::size_t c : by_doc_[column]) {
      if (cover_count_[c] == 0) gain += problem_.table.concepts[c].weight;
    }
    return gain;
  }

  double Bound(std::size_t next, double current) const {
    const std::size_t r = k_ - chosen_.size();
    std::vector<double> gains;
    std::vector<bool> reachable(cover_count_.size(), false);
    for (std::size_t i = next; i < order_.size(); ++i) {
      gains.push_back(Gain(order_[i]));
      for (std::size_t c : by_doc_[order_[i]]) reachable[c] = true;
    }
    double coverable = 0.0;
    for (std::size_t c = 0; c < reachable.size(); ++c) {
      if (reachable[c] && cover_count_[c] == 0) {
        coverable += problem_.table.concepts[c].weight;
      }
    }
    const std::size_t take = std::min(r, gains.size());
    std::partial_sort(gains.begin(), gains.begin() + take, gains.end(),
                      std::greater<>());
    const double top = std::accumulate(gains.begin(), gains.begin() + take, 0.0);
    return current + std::min(coverable, top);
  }

  void Visit(std::size_t next, double current) {
    if (chosen_.size() == k_) {
      // Subsets are reached in lexicographic order, so only a strictly
      // better objective replaces the incumbent.
      const double objective = CoveredWeight(problem_.table, chosen_);
      if (best_.empty() || objective > best_objective_) {
        best_objective_ = objective;
        best_ = chosen_;
      }
      return;
    }
    if (order_.size() - next < k_ - chosen_.size()) return;
    // A branch that can at best tie is dropped: the incumbent came first.
    // Weights are mention counts, so these sums are exact.
    if (!best_.empty() && Bound(next, current) <= best_objective_) {
      return;
    }
    const std::size_t column = order_[next];
    const double gain = Gain(column);
    chosen_.push_back(column);
    for (std::size_t c : by_doc_[column]) ++cover_count_[c];
    Visit(next + 1, current + gain);
    for (std::size_t c : by_doc_[column]) --cover_count_[c];
    chosen_.pop_back();
    Visit(next + 1, current);
  }

  const IlpProblem& problem_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> by_doc_;
  std::size_t k_;
  std::vector<int> cover_count_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  double best_objective_ = 0.0;
};

}  // namespace

ConceptTable ExtractConcepts(std::span<const PoolDoc> pool,
                             const EntityTagger& tagger) {
  std::map<std::pair<std::string, EntityType>, std::vector<int>> counts;
  for (std::size_t d = 0; d < pool.size(); ++d) {
    for (const auto& m : tagger.Tag(pool[d].doc_id, pool[d].text)) {
      auto& per_doc = counts[{text::AsciiLower(m.surface), m.etype}];
      if (per_doc.empty()) per_doc.assign(pool.size(), 0);
      ++per_doc[d];
    }
  }
  ConceptTable table;
  table.num_docs = pool.size();
  for (const auto& [key, per_doc] : counts) {
    table.concepts.push_back(
        {key.first, key.second,
         static_cast<double>(
             std::accumulate(per_doc.begin(), per_doc.end(), 0))});
    std::vector<std::uint8_t> row(pool.size(), 0);
    for (std::size_t d = 0; d < pool.size(); ++d) row[d] = per_doc[d] > 0;
    table.occurrence.push_back(std::move(row));
  }
  return table;
}

double CoveredWeight(const ConceptTable& table,
                     const std::vector<std::size_t>& chosen) {
  double total = 0.0;
  for (std::size_t c = 0; c < table.concepts.size(); ++c) {
    for (std::size_t d : chosen) {
      if (table.occurrence[c][d]) {
        total += table.concepts[c].weight;
        break;
      }
    }
  }
  return total;
}

Selection SolveExact(const IlpProblem& problem, std::size_t cap) {
  CheckProblem(problem);
  if (problem.pool.size() > cap) {
    throw Error("exact ILP solver supports at most " + std::to_string(cap) +
                " documents (pool has " + std::to_string(problem.pool.size()) +
                "); use the greedy solver");
  }
  if (problem.table.concepts.empty()) return PoolOrderFallback(problem);
  const std::size_t k = std::min(problem.max_docs, problem.pool.size());
  if (k == problem.pool.size()) {
    std::vector<std::size_t> all(k);
    std::iota(all.begin(), all.end(), 0);
    return MakeSelection(problem, all);
  }
  return MakeSelection(problem, BranchAndBound(problem, k).Run());
}

Selection SolveGreedy(const IlpProblem& problem) {
  CheckProblem(problem);
  if (problem.table.concepts.empty()) return PoolOrderFallback(problem);
  const auto order = IdOrder(problem);
  const auto by_doc = ConceptsByDoc(problem.table);
  std::vector<bool> covered(problem.table.concepts.size(), false);
  std::vector<bool> taken(problem.pool.size(), false);
  std::vector<std::size_t> chosen;
  while (chosen.size() < problem.max_docs) {
    double best_gain = 0.0;
    std::size_t best = order.size();
    for (std::size_t column : order) {
      if (taken[column]) continue;
      double gain = 0.0;
      for (std::size_t c : by_doc[column]) {
        if (!covered[c]) gain += problem.table.concepts[c].weight;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = column;
      }
    }
    if (best == order.size()) break;
    taken[best] = true;
    chosen.push_back(best);
    for (std::size_t c : by_doc[best]) covered[c] = true;
  }
  return MakeSelection(problem, chosen);
}

SolverKind ParseSolverKind(std::string_view name) {
  if (name == "exact") return SolverKind::kExact;
  if (name == "greedy") return SolverKind::kGreedy;
  if (name == "auto") return SolverKind::kAuto;
  throw Error("unknown solver \"" + std::string(name) + "\"");
}

Selection Solve(const IlpProblem& problem, SolverKind kind, std::size_t cap) {
  switch (kind) {
    case SolverKind::kExact:
      return SolveExact(problem, cap);
    case SolverKind::kGreedy:
      return SolveGreedy(problem);
    case SolverKind::kAuto:
      break;
  }
  return problem.pool.size() <= cap ? SolveExact(problem, cap)
                                    : SolveGreedy(problem);
}

}  // namespace factstream
