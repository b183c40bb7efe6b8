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

#ifndef FACTSTREAM_CORPUS_HPP_
#define FACTSTREAM_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "factstream/entities.hpp"
#include "factstream/error.hpp"

namespace factstream {

enum class SourceType { kTwitter, kReddit, kNews };

std::string_view SourceTypeName(SourceType source);
// Accepts the wire names "twitter", "reddit" and "news".
SourceType ParseSourceType(std::string_view name);

// One stream item. `text` is always NormalizeText(raw_text, source).
struct Document {
  std::string doc_id;
  std::string event_id;
  SourceType source = SourceType::kNews;
  std::int64_t timestamp = 0;
  std::string raw_text;
  std::string text;
};

// Builds a Document, normalizing its text. Throws Error if timestamp <= 0.
Document MakeDocument(std::string doc_id, std::string event_id,
                      SourceType source, std::int64_t timestamp,
                      std::string raw_text);

struct Period {
  std::int64_t start = 0;  // inclusive
  std::int64_t end = 0;    // exclusive
};

// One [start, end) interval per day, sorted and non-overlapping.
class EventTimeline {
 public:
  EventTimeline() = default;
  // Throws Error unless every period has start < end and periods are sorted
  // without overlap.
  EventTimeline(std::string event_id, std::vector<Period> periods);

  const std::string& event_id() const { return event_id_; }
  const std::vector<Period>& periods() const { return periods_; }
  std::size_t size() const { return periods_.size(); }

 private:
  std::string event_id_;
  std::vector<Period> periods_;
};

struct QueryProfile {
  std::set<EntityType> expected_entity_types;
  std::set<std::string> keywords;

  // At least one of the two sets is nonempty.
  bool Valid() const {
    return !expected_entity_types.empty() || !keywords.empty();
  }
};

struct Query {
  std::string query_id;
  std::string text;
  std::vector<std::string> indicative_terms;
  QueryProfile profile;
};

// Throws Error if indicative_terms is empty, the profile is empty, or a
// query_id repeats.
void ValidateQueries(const std::vector<Query>& queries);

// Tweet normalization: retweet prefixes, @-mentions, URLs, emoji and ASCII
// emoticons are removed; hashtags lose their '#' and are word-segmented.
// Other sources only get URL removal. Whitespace is collapsed for all.
// Idempotent.
std::string NormalizeText(std::string_view raw, SourceType source);

// Splits a hashtag body (no leading '#') into lowercase words. Camel-case
// and letter/digit boundaries split first; each alphabetic chunk is then
// segmented by greedy longest match against the bundled wordlist. Letters
// that match no word stay together as one residue token. The concatenation
// of the result equals AsciiLower(tag).
std::vector<std::string> SegmentHashtag(std::string_view tag);

std::optional<std::size_t> AssignPeriod(const Document& doc,
                                        const EventTimeline& timeline);

// Documents of one event falling in period `index`, in input order.
std::vector<Document> SliceByPeriod(const std::vector<Document>& docs,
                                    const EventTimeline& timeline,
                                    std::size_t index);

}  // namespace factstream

#endif  // FACTSTREAM_CORPUS_HPP_
