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

#ifndef FACTSTREAM_ENTITIES_HPP_
#define FACTSTREAM_ENTITIES_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "factstream/error.hpp"

namespace factstream {

// Closed entity-type label set.
enum class EntityType {
  kPerson,
  kLocation,
  kOrganization,
  kNumber,
  kDate,
  kTime,
  kMoney,
  kPercent,
  kMisc,
};

std::string_view EntityTypeName(EntityType type);

// Parses an upper-case label such as "LOCATION". Throws Error on unknown
// labels.
EntityType ParseEntityType(std::string_view label);

struct EntityMention {
  std::string surface;
  EntityType etype;
  std::size_t start = 0;  // byte offsets, [start, end)
  std::size_t end = 0;

  bool operator==(const EntityMention&) const = default;
};

class EntityTagger {
 public:
  virtual ~EntityTagger() = default;

  // Mentions sorted by start offset, non-overlapping.
  virtual std::vector<EntityMention> Tag(std::string_view doc_id,
                                         std::string_view text) const = 0;
};

// Default tagger: numeric patterns, then the bundled gazetteer, then
// capitalized multi-token spans as MISC.
class RuleTagger : public EntityTagger {
 public:
  RuleTagger();
  std::vector<EntityMention> Tag(std::string_view doc_id,
                                 std::string_view text) const override;

 private:
  struct GazetteerEntry {
    std::vector<std::string> tokens;
    EntityType etype;
  };
  // Keyed by first token; entries sorted longest first.
  std::map<std::string, std::vector<GazetteerEntry>, std::less<>> gazetteer_;
};

// Mentions precomputed by an external NER system, read from JSON Lines:
//   {"doc_id": str, "mentions": [{"surface", "etype", "start", "end"}]}
// Documents absent from the file have no mentions.
class AnnotationTagger : public EntityTagger {
 public:
  explicit AnnotationTagger(const std::string& path);
  std::vector<EntityMention> Tag(std::string_view doc_id,
                                 std::string_view text) const override;

 private:
  std::map<std::string, std::vector<EntityMention>, std::less<>> mentions_;
};

// "rule" or "annotations:<path>". Anything else throws Error.
std::unique_ptr<EntityTagger> MakeTagger(std::string_view config);

std::vector<EntityMention> TagEntities(std::string_view text,
                                       const EntityTagger& tagger,
                                       std::string_view doc_id = {});

}  // namespace factstream

#endif  // FACTSTREAM_ENTITIES_HPP_
