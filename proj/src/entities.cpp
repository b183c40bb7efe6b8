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

#include "factstream/entities.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <sstream>

#include "factstream/text.hpp"
#include "json.hpp"
#include "resources.hpp"

namespace factstream {
namespace {

constexpr std::array<std::string_view, 9> kEntityNames = {
    "PERSON", "LOCATION", "ORGANIZATION", "NUMBER", "DATE",
    "TIME",   "MONEY",    "PERCENT",      "MISC"};

struct Token {
  std::string_view surface;  // punctuation-trimmed
  std::size_t start = 0;
  std::size_t end = 0;
  bool break_after = false;  // trailing punctuation was trimmed
};

constexpr std::string_view kLeadingPunct = "\"'([{";
constexpr std::string_view kTrailingPunct = ".,;:!?\"')]}";

std::vector<Token> SplitTokens(std::string_view s) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && text::IsAsciiSpace(s[pos])) ++pos;
    std::size_t end = pos;
    while (end < s.size() && !text::IsAsciiSpace(s[end])) ++end;
    std::size_t a = pos;
    std::size_t b = end;
    while (a < b && kLeadingPunct.find(s[a]) != std::string_view::npos) ++a;
    while (b > a && kTrailingPunct.find(s[b - 1]) != std::string_view::npos) --b;
    if (a < b) tokens.push_back({s.substr(a, b - a), a, b, b < end});
    pos = end;
  }
  return tokens;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// 12, 1,000, 3.5
bool IsNumeric(std::string_view t) {
  if (t.empty() || !IsDigit(t.front()) || !IsDigit(t.back())) return false;
  bool seen_dot = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const char c = t[i];
    if (IsDigit(c)) continue;
    if (c == ',' && !seen_dot) continue;
    if (c == '.' && !seen_dot) {
      seen_dot = true;
      continue;
    }
    return false;
  }
  return true;
}

// Length of a numeric prefix followed by "-word" ("10,000-acre"), or 0.
std::size_t HyphenatedNumericPrefix(std::string_view t) {
  const auto dash = t.find('-');
  if (dash == std::string_view::npos || dash + 1 >= t.size()) return 0;
  if (!IsNumeric(t.substr(0, dash))) return 0;
  for (char c : t.substr(dash + 1)) {
    if (!text::IsAsciiAlnum(c) && c != '-') return 0;
  }
  return dash;
}

bool LowerIn(std::string_view t, std::initializer_list<std::string_view> set) {
  const std::string lower = text::AsciiLower(t);
  return std::find(set.begin(), set.end(), lower) != set.end();
}

bool IsScaleWord(std::string_view t) {
  return LowerIn(t, {"hundred", "thousand", "million", "billion", "trillion"});
}

bool IsNumberWord(std::string_view t) {
  return LowerIn(t, {"one",     "two",       "three",    "four",     "five",
                     "six",     "seven",     "eight",    "nine",     "ten",
                     "eleven",  "twelve",    "thirteen", "fourteen", "fifteen",
                     "sixteen", "seventeen", "eighteen", "nineteen", "twenty",
                     "thirty",  "forty",     "fifty",    "sixty",    "seventy",
                     "eighty",  "ninety",    "hundred",  "hundreds", "thousand",
                     "thousands", "million", "millions", "dozen",    "dozens"});
}

bool IsMeridiem(std::string_view t) {
  return LowerIn(t, {"am", "pm", "a.m", "p.m"});
}

bool IsMonth(std::string_view t) {
  static constexpr std::array<std::string_view, 24> kMonths = {
      "January", "February", "March",    "April",   "May",  "June",
      "July",    "August",   "September", "October", "November", "December",
      "Jan",     "Feb",      "Mar",      "Apr",     "Jun",  "Jul",
      "Aug",     "Sep",      "Sept",     "Oct",     "Nov",  "Dec"};
  return std::find(kMonths.begin(), kMonths.end(), t) != kMonths.end();
}

bool IsWeekday(std::string_view t) {
  static constexpr std::array<std::string_view, 7> kDays = {
      "Monday", "Tuesday", "Wednesday", "Thursday",
      "Friday", "Saturday", "Sunday"};
  return std::find(kDays.begin(), kDays.end(), t) != kDays.end();
}

std::optional<int> SmallInt(std::string_view t) {
  if (t.empty() || t.size() > 4) return std::nullopt;
  int v = 0;
  for (char c : t) {
    if (!IsDigit(c)) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

bool IsDayOfMonth(std::string_view t) {
  for (std::string_view suffix : {"st", "nd", "rd", "th"}) {
    if (t.size() > suffix.size() && t.ends_with(suffix)) {
      t.remove_suffix(suffix.size());
      break;
    }
  }
  const auto v = SmallInt(t);
  return v && t.size() <= 2 && *v >= 1 && *v <= 31;
}

bool IsYear(std::string_view t) {
  const auto v = SmallInt(t);
  return v && t.size() == 4 && *v >= 1900 && *v <= 2100;
}

// 5/12, 5/12/2018
bool IsSlashDate(std::string_view t) {
  int parts = 0;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    const auto slash = t.find('/', pos);
    const auto part = t.substr(pos, slash == std::string_view::npos
                                        ? std::string_view::npos
                                        : slash - pos);
    if (!SmallInt(part) || part.size() > 4) return false;
    ++parts;
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return parts == 2 || parts == 3;
}

// 4:30, 12:05
bool IsClock(std::string_view t) {
  const auto colon = t.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon > 2) return false;
  const auto h = SmallInt(t.substr(0, colon));
  const auto m = t.substr(colon + 1);
  return h && *h <= 24 && m.size() == 2 && SmallInt(m) && *SmallInt(m) < 60;
}

// 5pm, 11a.m
bool IsCompactTime(std::string_view t) {
  for (std::string_view suffix : {"am", "pm", "a.m", "p.m"}) {
    if (t.size() > suffix.size() &&
        text::AsciiLower(t.substr(t.size() - suffix.size())) == suffix) {
      const auto h = t.substr(0, t.size() - suffix.size());
      const auto v = SmallInt(h);
      return (v && h.size() <= 2 && *v >= 1 && *v <= 12) || IsClock(h);
    }
  }
  return false;
}

class MentionBuilder {
 public:
  MentionBuilder(std::string_view text, const std::vector<Token>& tokens)
      : text_(text), tokens_(tokens), covered_(tokens.size(), false) {}

  bool Covered(std::size_t i) const { return covered_[i]; }

  // Tokens [first, last] can be spanned without crossing a break.
  bool Joinable(std::size_t first, std::size_t last) const {
    if (last >= tokens_.size()) return false;
    for (std::size_t i = first; i < last; ++i) {
      if (tokens_[i].break_after) return false;
    }
    for (std::size_t i = first; i <= last; ++i) {
      if (covered_[i]) return false;
    }
    return true;
  }

  void Add(std::size_t first, std::size_t last, EntityType type,
           std::size_t end_override = 0) {
    const std::size_t start = tokens_[first].start;
    const std::size_t end = end_override ? end_override : tokens_[last].end;
    mentions_.push_back(
        {std::string(text_.substr(start, end - start)), type, start, end});
    for (std::size_t i = first; i <= last; ++i) covered_[i] = true;
  }

  std::vector<EntityMention> Finish() {
    std::sort(mentions_.begin(), mentions_.end(),
              [](const auto& a, const auto& b) { return a.start < b.start; });
    return std::move(mentions_);
  }

 private:
  std::string_view text_;
  const std::vector<Token>& tokens_;
  std::vector<bool> covered_;
  std::vector<EntityMention> mentions_;
};

void TagNumeric(std::string_view text, const std::vector<Token>& tokens,
                MentionBuilder* b) {
  auto next_is = [&](std::size_t i, auto pred) {
    return b->Joinable(i, i + 1) && pred(tokens[i + 1].surface);
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (b->Covered(i)) continue;
    const auto t = tokens[i].surface;

    if (t.size() > 1 && t.front() == '$' && IsNumeric(t.substr(1))) {
      b->Add(i, next_is(i, IsScaleWord) ? i + 1 : i, EntityType::kMoney);
      continue;
    }
    if (IsNumeric(t) && next_is(i, [](auto s) {
          return LowerIn(s, {"dollars"});
        })) {
      b->Add(i, i + 1, EntityType::kMoney);
      continue;
    }
    if (t.size() > 1 && t.back() == '%' &&
        IsNumeric(t.substr(0, t.size() - 1))) {
      b->Add(i, i, EntityType::kPercent);
      continue;
    }
    if (IsNumeric(t) && next_is(i, [](auto s) {
          return LowerIn(s, {"percent"});
        })) {
      b->Add(i, i + 1, EntityType::kPercent);
      continue;
    }
    if (IsMonth(t)) {
      if (next_is(i, IsDayOfMonth)) {
        // "May 5, 2018": the comma after the day is a break we may cross.
        std::size_t last = i + 1;
        if (last + 1 < tokens.size() && !b->Covered(last + 1) &&
            IsYear(tokens[last + 1].surface) &&
            (!tokens[last].break_after || text[tokens[last].end] == ',')) {
          ++last;
        }
        b->Add(i, last, EntityType::kDate);
        continue;
      }
      if (next_is(i, IsYear)) {
        b->Add(i, i + 1, EntityType::kDate);
        continue;
      }
    }
    if (IsWeekday(t) || IsSlashDate(t)) {
      b->Add(i, i, EntityType::kDate);
      continue;
    }
    if (IsClock(t)) {
      b->Add(i, next_is(i, IsMeridiem) ? i + 1 : i, EntityType::kTime);
      continue;
    }
    if (IsCompactTime(t)) {
      b->Add(i, i, EntityType::kTime);
      continue;
    }
    if (const auto v = SmallInt(t);
        v && t.size() <= 2 && *v >= 1 && *v <= 12 && next_is(i, IsMeridiem)) {
      b->Add(i, i + 1, EntityType::kTime);
      continue;
    }
    if (IsNumeric(t) || IsNumberWord(t)) {
      b->Add(i, next_is(i, IsScaleWord) ? i + 1 : i, EntityType::kNumber);
      continue;
    }
    if (const auto prefix = HyphenatedNumericPrefix(t); prefix > 0) {
      b->Add(i, i, EntityType::kNumber, tokens[i].start + prefix);
      continue;
    }
  }
}

}  // namespace

std::string_view EntityTypeName(EntityType type) {
  return kEntityNames[static_cast<std::size_t>(type)];
}

EntityType ParseEntityType(std::string_view label) {
  for (std::size_t i = 0; i < kEntityNames.size(); ++i) {
    if (kEntityNames[i] == label) return static_cast<EntityType>(i);
  }
  throw Error("unknown entity type \"" + std::string(label) + "\"");
}

RuleTagger::RuleTagger() {
  std::istringstream in{std::string(resources::GazetteerTsv())};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    GazetteerEntry entry;
    entry.etype = ParseEntityType(line.substr(0, tab));
    std::istringstream words(line.substr(tab + 1));
    std::string w;
    while (words >> w) entry.tokens.push_back(w);
    if (entry.tokens.empty()) continue;
    gazetteer_[entry.tokens.front()].push_back(std::move(entry));
  }
  for (auto& [first, entries] : gazetteer_) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) {
                       return a.tokens.size() > b.tokens.size();
                     });
  }
}

std::vector<EntityMention> RuleTagger::Tag(std::string_view /*doc_id*/,
                                           std::string_view text) const {
  const auto tokens = SplitTokens(text);
  MentionBuilder builder(text, tokens);
  TagNumeric(text, tokens, &builder);

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (builder.Covered(i)) continue;
    auto it = gazetteer_.find(tokens[i].surface);
    if (it == gazetteer_.end()) continue;
    for (const auto& entry : it->second) {
      const std::size_t last = i + entry.tokens.size() - 1;
      if (!builder.Joinable(i, last)) continue;
      bool match = true;
      for (std::size_t k = 1; k < entry.tokens.size(); ++k) {
        if (tokens[i + k].surface != entry.tokens[k]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      builder.Add(i, last, entry.etype);
      i = last;
      break;
    }
  }

  // Capitalized runs of two or more tokens.
  auto capitalized = [&](std::size_t i) {
    return !builder.Covered(i) && text::IsAsciiUpper(tokens[i].surface[0]);
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!capitalized(i)) continue;
    std::size_t last = i;
    while (!tokens[last].break_after && last + 1 < tokens.size() &&
           capitalized(last + 1)) {
      ++last;
    }
    if (last > i) builder.Add(i, last, EntityType::kMisc);
    i = last;
  }
  return builder.Finish();
}

AnnotationTagger::AnnotationTagger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open annotation file " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      auto& list = mentions_[j.at("doc_id").get<std::string>()];
      for (const auto& m : j.at("mentions")) {
        list.push_back({m.at("surface").get<std::string>(),
                        ParseEntityType(m.at("etype").get<std::string>()),
                        m.at("start").get<std::size_t>(),
                        m.at("end").get<std::size_t>()});
      }
      std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
        return a.start < b.start;
      });
    } catch (const nlohmann::json::exception& e) {
      throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::vector<EntityMention> AnnotationTagger::Tag(std::string_view doc_id,
                                                 std::string_view text) const {
  auto it = mentions_.find(doc_id);
  if (it == mentions_.end()) return {};
  for (const auto& m : it->second) {
    if (m.start > m.end || m.end > text.size()) {
      throw Error("annotation for " + std::string(doc_id) +
                  " has a span outside the text");
    }
  }
  return it->second;
}

std::unique_ptr<EntityTagger> MakeTagger(std::string_view config) {
  if (config == "rule") return std::make_unique<RuleTagger>();
  constexpr std::string_view kPrefix = "annotations:";
  if (config.starts_with(kPrefix)) {
    return std::make_unique<AnnotationTagger>(
        std::string(config.substr(kPrefix.size())));
  }
  throw Error("unknown tagger config \"" + std::string(config) + "\"");
}

std::vector<EntityMention> TagEntities(std::string_view text,
                                       const EntityTagger& tagger,
                                       std::string_view doc_id) {
  return tagger.Tag(doc_id, text);
}

}  // namespace factstream
