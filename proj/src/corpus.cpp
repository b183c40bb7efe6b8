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

#include "factstream/corpus.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <unordered_set>

#include "factstream/text.hpp"
#include "resources.hpp"

namespace factstream {
namespace {

using text::IsAsciiAlnum;
using text::IsAsciiSpace;

struct Wordlist {
  std::unordered_set<std::string> words;
  std::size_t max_length = 0;
};

const Wordlist& BundledWordlist() {
  static const auto* const kWordlist = [] {
    auto* list = new Wordlist();
    std::istringstream in{std::string(resources::WordlistTsv())};
    std::string line;
    while (std::getline(in, line)) {
      const auto tab = line.find('\t');
      std::string word = line.substr(0, tab);
      if (word.empty()) continue;
      list->max_length = std::max(list->max_length, word.size());
      list->words.insert(std::move(word));
    }
    return list;
  }();
  return *kWordlist;
}

bool IsTagChar(char c) { return IsAsciiAlnum(c) || c == '_'; }

// True if the byte before `pos` cannot continue a word, so a '@' or '#' at
// `pos` starts a mention or tag.
bool AtTokenStart(std::string_view s, std::size_t pos) {
  return pos == 0 || !IsTagChar(s[pos - 1]);
}

bool StartsWith(std::string_view s, std::size_t pos, std::string_view prefix) {
  return s.substr(pos, prefix.size()) == prefix;
}

std::string RemoveUrls(std::string_view s) {
  std::string out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const bool url_start =
        (pos == 0 || IsAsciiSpace(s[pos - 1])) &&
        (StartsWith(s, pos, "http://") || StartsWith(s, pos, "https://") ||
         StartsWith(s, pos, "www."));
    if (url_start) {
      while (pos < s.size() && !IsAsciiSpace(s[pos])) ++pos;
      out.push_back(' ');
      continue;
    }
    out.push_back(s[pos++]);
  }
  return out;
}

std::string CollapseWhitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (IsAsciiSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

// Leading "RT @user:", "RT:" or "RT " prefixes, repeated.
std::string_view StripRetweetPrefix(std::string_view s) {
  for (;;) {
    std::size_t pos = 0;
    while (pos < s.size() && IsAsciiSpace(s[pos])) ++pos;
    if (!StartsWith(s, pos, "RT")) return s;
    std::size_t p = pos + 2;
    if (p < s.size() && !IsAsciiSpace(s[p]) && s[p] != ':') return s;
    while (p < s.size() && IsAsciiSpace(s[p])) ++p;
    if (p < s.size() && s[p] == '@') {
      ++p;
      while (p < s.size() && IsTagChar(s[p])) ++p;
    }
    if (p < s.size() && s[p] == ':') ++p;
    s.remove_prefix(p);
  }
}

std::string RemoveMentions(std::string_view s) {
  std::string out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '@' && AtTokenStart(s, pos) && pos + 1 < s.size() &&
        IsTagChar(s[pos + 1])) {
      ++pos;
      while (pos < s.size() && IsTagChar(s[pos])) ++pos;
      out.push_back(' ');
      continue;
    }
    out.push_back(s[pos++]);
  }
  return out;
}

std::string RemoveEmoji(std::string_view s) {
  std::string out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t len = 0;
    const char32_t cp = text::DecodeUtf8(s, pos, &len);
    if (text::IsEmojiCodepoint(cp)) {
      out.push_back(' ');
    } else {
      out.append(s.substr(pos, len));
    }
    pos += len;
  }
  return out;
}

// ASCII emoticons, removed only when they stand alone as a token.
constexpr std::array<std::string_view, 30> kEmoticons = {
    ":)",  ":-)", ":(",  ":-(", ":D",  ":-D", ";)",  ";-)", ":P",  ":-P",
    ":p",  ":-p", ":/",  ":-/", ":'(", ":O",  ":o",  ":|",  ":-|", "=)",
    "=(",  "<3",  "</3", "XD",  "xD",  ":*",  ":-*", "^_^", "-_-", ":]"};

std::string RemoveEmoticons(std::string_view s) {
  std::string out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (IsAsciiSpace(s[pos])) {
      out.push_back(s[pos++]);
      continue;
    }
    std::size_t end = pos;
    while (end < s.size() && !IsAsciiSpace(s[end])) ++end;
    const auto token = s.substr(pos, end - pos);
    if (std::find(kEmoticons.begin(), kEmoticons.end(), token) ==
        kEmoticons.end()) {
      out.append(token);
    }
    pos = end;
  }
  return out;
}

std::string ExpandHashtags(std::string_view s) {
  std::string out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '#' && AtTokenStart(s, pos) && pos + 1 < s.size() &&
        IsTagChar(s[pos + 1])) {
      std::size_t end = pos + 1;
      while (end < s.size() && IsTagChar(s[end])) ++end;
      out.push_back(' ');
      // Underscores separate words inside a tag.
      std::string_view body = s.substr(pos + 1, end - pos - 1);
      while (!body.empty()) {
        const auto underscore = body.find('_');
        for (const auto& word : SegmentHashtag(body.substr(0, underscore))) {
          out.append(word);
          out.push_back(' ');
        }
        if (underscore == std::string_view::npos) break;
        body.remove_prefix(underscore + 1);
      }
      pos = end;
      continue;
    }
    out.push_back(s[pos++]);
  }
  return out;
}

std::string NormalizeOnce(std::string_view raw, SourceType source) {
  if (source != SourceType::kTwitter) {
    return CollapseWhitespace(RemoveUrls(raw));
  }
  std::string s = RemoveUrls(StripRetweetPrefix(raw));
  s = RemoveMentions(s);
  s = RemoveEmoji(s);
  s = RemoveEmoticons(s);
  s = ExpandHashtags(s);
  return CollapseWhitespace(s);
}

void SegmentAlphaChunk(std::string_view chunk,
                       std::vector<std::string>* words) {
  const auto& list = BundledWordlist();
  const std::string lower = text::AsciiLower(chunk);
  std::string residue;
  std::size_t pos = 0;
  while (pos < lower.size()) {
    std::size_t best = 0;
    const std::size_t limit = std::min(list.max_length, lower.size() - pos);
    for (std::size_t len = limit; len >= 1; --len) {
      // Single letters only start a word outside a residue run.
      if (len == 1 && !residue.empty()) break;
      if (list.words.contains(lower.substr(pos, len))) {
        best = len;
        break;
      }
    }
    if (best == 0) {
      residue.push_back(lower[pos++]);
      continue;
    }
    if (!residue.empty()) {
      words->push_back(std::move(residue));
      residue.clear();
    }
    words->push_back(lower.substr(pos, best));
    pos += best;
  }
  if (!residue.empty()) words->push_back(std::move(residue));
}

bool IsAsciiAlpha(char c) { return IsAsciiAlnum(c) && !(c >= '0' && c <= '9'); }
bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAsciiLowerAlpha(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

std::string_view SourceTypeName(SourceType source) {
  switch (source) {
    case SourceType::kTwitter:
      return "twitter";
    case SourceType::kReddit:
      return "reddit";
    case SourceType::kNews:
      return "news";
  }
  return "news";
}

SourceType ParseSourceType(std::string_view name) {
  if (name == "twitter") return SourceType::kTwitter;
  if (name == "reddit") return SourceType::kReddit;
  if (name == "news") return SourceType::kNews;
  throw Error("unknown source_type \"" + std::string(name) + "\"");
}

Document MakeDocument(std::string doc_id, std::string event_id,
                      SourceType source, std::int64_t timestamp,
                      std::string raw_text) {
  if (timestamp <= 0) {
    throw Error("document " + doc_id + ": timestamp must be positive");
  }
  Document doc;
  doc.doc_id = std::move(doc_id);
  doc.event_id = std::move(event_id);
  doc.source = source;
  doc.timestamp = timestamp;
  doc.text = NormalizeText(raw_text, source);
  doc.raw_text = std::move(raw_text);
  return doc;
}

EventTimeline::EventTimeline(std::string event_id, std::vector<Period> periods)
    : event_id_(std::move(event_id)), periods_(std::move(periods)) {
  for (std::size_t i = 0; i < periods_.size(); ++i) {
    if (periods_[i].start >= periods_[i].end) {
      throw Error("timeline " + event_id_ + ": period " + std::to_string(i) +
                  " is empty or reversed");
    }
    if (i > 0 && periods_[i].start < periods_[i - 1].end) {
      throw Error("timeline " + event_id_ + ": period " + std::to_string(i) +
                  " overlaps or precedes its predecessor");
    }
  }
}

void ValidateQueries(const std::vector<Query>& queries) {
  std::set<std::string> seen;
  for (const auto& q : queries) {
    if (!seen.insert(q.query_id).second) {
      throw Error("duplicate query_id " + q.query_id);
    }
    if (q.indicative_terms.empty()) {
      throw Error("query " + q.query_id + " has no indicative terms");
    }
    if (!q.profile.Valid()) {
      throw Error("query " + q.query_id +
                  " has neither entity types nor keywords");
    }
  }
}

std::string NormalizeText(std::string_view raw, SourceType source) {
  // Each pass only removes bytes, except hashtag expansion which also
  // removes a '#'; so the loop reaches a fixed point.
  std::string current = NormalizeOnce(raw, source);
  for (;;) {
    std::string next = NormalizeOnce(current, source);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<std::string> SegmentHashtag(std::string_view tag) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos < tag.size()) {
    const char c = tag[pos];
    std::size_t end = pos + 1;
    if (IsAsciiDigit(c)) {
      while (end < tag.size() && IsAsciiDigit(tag[end])) ++end;
      words.emplace_back(tag.substr(pos, end - pos));
    } else if (IsAsciiAlpha(c)) {
      // One camel-case chunk: "Camp", "NYC" before "Fire", "fire".
      if (text::IsAsciiUpper(c)) {
        while (end < tag.size() && text::IsAsciiUpper(tag[end])) ++end;
        if (end - pos > 1 && end < tag.size() &&
            IsAsciiLowerAlpha(tag[end])) {
          --end;  // "NYCFire": last capital starts the next chunk
        }
      }
      if (end == pos + 1 || !text::IsAsciiUpper(tag[end - 1])) {
        while (end < tag.size() && IsAsciiLowerAlpha(tag[end])) ++end;
      }
      SegmentAlphaChunk(tag.substr(pos, end - pos), &words);
    } else {
      while (end < tag.size() && !IsAsciiAlnum(tag[end])) ++end;
      words.push_back(text::AsciiLower(tag.substr(pos, end - pos)));
    }
    pos = end;
  }
  return words;
}

std::optional<std::size_t> AssignPeriod(const Document& doc,
                                        const EventTimeline& timeline) {
  const auto& periods = timeline.periods();
  // First period whose end is past the timestamp.
  auto it = std::upper_bound(
      periods.begin(), periods.end(), doc.timestamp,
      [](std::int64_t ts, const Period& p) { return ts < p.end; });
  if (it == periods.end() || doc.timestamp < it->start) return std::nullopt;
  return static_cast<std::size_t>(it - periods.begin());
}

std::vector<Document> SliceByPeriod(const std::vector<Document>& docs,
                                    const EventTimeline& timeline,
                                    std::size_t index) {
  std::vector<Document> slice;
  for (const auto& doc : docs) {
    if (doc.event_id != timeline.event_id()) continue;
    if (AssignPeriod(doc, timeline) == index) slice.push_back(doc);
  }
  return slice;
}

}  // namespace factstream
