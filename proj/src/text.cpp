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

#include "factstream/text.hpp"

#include <sstream>

#include "resources.hpp"

namespace factstream::text {

char32_t DecodeUtf8(std::string_view s, std::size_t pos, std::size_t* length) {
  const auto lead = static_cast<unsigned char>(s[pos]);
  *length = 1;
  if (lead < 0x80) return lead;
  std::size_t n = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    n = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    n = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    n = 4;
    cp = lead & 0x07;
  } else {
    return 0xFFFD;
  }
  if (pos + n > s.size()) return 0xFFFD;
  for (std::size_t i = 1; i < n; ++i) {
    const auto c = static_cast<unsigned char>(s[pos + i]);
    if ((c & 0xC0) != 0x80) return 0xFFFD;
    cp = (cp << 6) | (c & 0x3F);
  }
  *length = n;
  return cp;
}

bool IsAsciiAlnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }

bool IsEmojiCodepoint(char32_t cp) {
  return (cp >= 0x1F600 && cp <= 0x1F64F) ||  // Emoticons
         (cp >= 0x1F300 && cp <= 0x1F5FF) ||  // Misc Symbols & Pictographs
         (cp >= 0x1F900 && cp <= 0x1F9FF) ||  // Supplemental Symbols
         (cp >= 0x1F680 && cp <= 0x1F6FF) ||  // Transport & Map
         (cp >= 0x1FA70 && cp <= 0x1FAFF) ||  // Symbols & Pictographs Ext-A
         (cp >= 0x1F1E6 && cp <= 0x1F1FF) ||  // regional indicators
         (cp >= 0x2600 && cp <= 0x27BF) ||    // Misc Symbols, Dingbats
         cp == 0xFE0F || cp == 0x200D;        // VS16, ZWJ
}

bool IsWordCodepoint(char32_t cp) {
  if (cp < 0x80) return IsAsciiAlnum(static_cast<char>(cp));
  if (cp == 0xFFFD || IsEmojiCodepoint(cp)) return false;
  if (cp <= 0xBF || cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  return true;
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (IsAsciiUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> WordTokens(std::string_view s) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t len = 0;
    const char32_t cp = DecodeUtf8(s, pos, &len);
    if (IsWordCodepoint(cp)) {
      current.append(s.substr(pos, len));
    } else if (!current.empty()) {
      tokens.push_back(AsciiLower(current));
      current.clear();
    }
    pos += len;
  }
  if (!current.empty()) tokens.push_back(AsciiLower(current));
  return tokens;
}

const std::unordered_set<std::string>& Stopwords() {
  static const auto* const kStopwords = [] {
    auto* set = new std::unordered_set<std::string>();
    std::istringstream in{std::string(resources::StopwordsTxt())};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) set->insert(line);
    }
    return set;
  }();
  return *kStopwords;
}

std::vector<std::string> Analyzer::Analyze(std::string_view s) const {
  auto tokens = WordTokens(s);
  if (!remove_stopwords_) return tokens;
  const auto& stop = Stopwords();
  std::erase_if(tokens, [&](const std::string& t) { return stop.contains(t); });
  return tokens;
}

}  // namespace factstream::text
