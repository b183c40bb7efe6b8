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

#ifndef FACTSTREAM_SELECT_HPP_
#define FACTSTREAM_SELECT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "factstream/entities.hpp"
#include "factstream/error.hpp"

namespace factstream {

struct PoolDoc {
  std::string doc_id;
  std::string text;
};

struct Concept {
  std::string surface;  // lowercased mention surface
  EntityType etype;
  double weight = 0.0;
};

// Concepts and the binary concept-by-document occurrence matrix of a pool.
struct ConceptTable {
  std::vector<Concept> concepts;
  std::vector<std::vector<std::uint8_t>> occurrence;  // [concept][doc]
  std::size_t num_docs = 0;
};

// Concept key (lowercased surface, etype); weight = mention count across
// the pool. Concepts are ordered by key.
ConceptTable ExtractConcepts(std::span<const PoolDoc> pool,
                             const EntityTagger& tagger);

// Maximize the weight of covered concepts choosing at most max_docs pool
// documents. Coverage is binary and each document costs one unit.
struct IlpProblem {
  ConceptTable table;
  std::size_t max_docs = 150;
  std::vector<std::string> pool;  // doc ids, column order of the table
};

struct Selection {
  std::vector<std::string> chosen;  // ascending doc_id
  double objective = 0.0;
};

inline constexpr std::size_t kDefaultExactCap = 25;

// Sum of the weights of concepts covered by `chosen` (pool column indices),
// summed in concept order.
double CoveredWeight(const ConceptTable& table,
                     const std::vector<std::size_t>& chosen);

// Branch and bound over document subsets. Among optimal selections the one
// with min(max_docs, |pool|) documents and the lexicographically smallest
// sorted doc_id sequence wins. Throws Error when the pool exceeds `cap`.
Selection SolveExact(const IlpProblem& problem,
                     std::size_t cap = kDefaultExactCap);

// Weighted max-coverage greedy: add the document with the largest marginal
// covered weight (ties by doc_id) until max_docs or no positive gain.
Selection SolveGreedy(const IlpProblem& problem);

enum class SolverKind { kExact, kGreedy, kAuto };

SolverKind ParseSolverKind(std::string_view name);

// kAuto runs the exact solver when the pool fits under `cap`. Pools without
// concepts select the first min(max_docs, |pool|) documents in pool order.
Selection Solve(const IlpProblem& problem, SolverKind kind,
                std::size_t cap = kDefaultExactCap);

}  // namespace factstream

#endif  // FACTSTREAM_SELECT_HPP_
