// Copyright 2026 The evtrig Authors.
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

#ifndef EVTRIG_CORPUS_TEXT_H_
#define EVTRIG_CORPUS_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evtrig {

// Half-open [start, end) range of code-point offsets.
struct CharSpan {
  size_t start = 0;
  size_t end = 0;

  bool operator==(const CharSpan &) const = default;
};

struct TokenSpan {
  std::string surface;  // UTF-8
  size_t start = 0;
  size_t end = 0;

  bool operator==(const TokenSpan &) const = default;
};

// Standoff offsets count Unicode code points, so documents are held as
// UTF-32 internally. Invalid UTF-8 bytes decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view s);
std::string EncodeUtf8(std::u32string_view s);

bool IsSpaceChar(char32_t c);
bool IsWordChar(char32_t c);

// Whitespace-separated chunks are cut into maximal runs of word characters;
// every other non-space character becomes a token of its own. Offsets are
// relative to `text` plus `base`.
std::vector<TokenSpan> Tokenize(std::u32string_view text, size_t base = 0);
std::vector<TokenSpan> Tokenize(std::string_view utf8_text);

// Sentence boundaries fall after '.', '!' or '?' when followed by whitespace
// and then an uppercase letter or a digit. A boundary is dropped when any
// protected span covers the cut or the whitespace gap after it. Returned
// spans exclude leading and trailing whitespace.
std::vector<CharSpan> SplitSentences(std::u32string_view text,
                                     std::span<const CharSpan> protect = {});

}  // namespace evtrig

#endif  // EVTRIG_CORPUS_TEXT_H_
