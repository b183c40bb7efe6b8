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

#ifndef FACTSTREAM_TEXT_HPP_
#define FACTSTREAM_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "factstream/error.hpp"

namespace factstream::text {

// Decodes one UTF-8 sequence starting at `pos`. Invalid or truncated input
// yields U+FFFD and a length of one byte so callers can copy bytes through.
char32_t DecodeUtf8(std::string_view s, std::size_t pos, std::size_t* length);

bool IsAsciiAlnum(char c);
bool IsAsciiSpace(char c);
bool IsAsciiUpper(char c);

// Emoji and pictograph blocks that tweet normalization strips.
bool IsEmojiCodepoint(char32_t cp);

// A codepoint that may be part of a word token.
bool IsWordCodepoint(char32_t cp);

// Lowercases ASCII letters only; every other byte is kept. This keeps
// lowercasing length-preserving on arbitrary UTF-8.
std::string AsciiLower(std::string_view s);

// Maximal runs of word codepoints, lowercased. No stopword removal.
std::vector<std::string> WordTokens(std::string_view s);

// Bundled English stopword list.
const std::unordered_set<std::string>& Stopwords();

// lowercase + word tokenization + optional stopword removal. No stemming.
class Analyzer {
 public:
  explicit Analyzer(bool remove_stopwords = true)
      : remove_stopwords_(remove_stopwords) {}

  std::vector<std::string> Analyze(std::string_view s) const;

 private:
  bool remove_stopwords_;
};

}  // namespace factstream::text

#endif  // FACTSTREAM_TEXT_HPP_
