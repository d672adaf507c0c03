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

#include "evtrig/corpus/text.h"

namespace evtrig {

std::u32string DecodeUtf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    int extra = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      extra = 3;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= s.size()) {
        ok = false;
        break;
      }
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool IsSpaceChar(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200B;
  }
}

bool IsWordChar(char32_t c) {
  if (c < 0x80) {
    return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') ||
           (c >= U'A' && c <= U'Z');
  }
  if (IsSpaceChar(c)) return false;
  // Latin-1 punctuation and symbols, general punctuation, arrows and math
  // operators count as punctuation. Everything else is treated as a letter.
  if (c >= 0x00A1 && c <= 0x00BF) return false;
  if (c == 0x00D7 || c == 0x00F7) return false;
  if (c >= 0x2010 && c <= 0x206F) return false;
  if (c >= 0x2190 && c <= 0x22FF) return false;
  if (c == 0xFFFD) return false;
  return true;
}

std::vector<TokenSpan> Tokenize(std::u32string_view text, size_t base) {
  std::vector<TokenSpan> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    char32_t c = text[i];
    if (IsSpaceChar(c)) {
      ++i;
      continue;
    }
    size_t j = i + 1;
    if (IsWordChar(c)) {
      while (j < n && IsWordChar(text[j])) ++j;
    }
    tokens.push_back({EncodeUtf8(text.substr(i, j - i)), base + i, base + j});
    i = j;
  }
  return tokens;
}

std::vector<TokenSpan> Tokenize(std::string_view utf8_text) {
  return Tokenize(DecodeUtf8(utf8_text));
}

namespace {

bool IsSentenceStart(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  if (c >= U'0' && c <= U'9') return true;
  // Latin-1 and Greek capitals.
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return true;
  if (c >= 0x0391 && c <= 0x03A9) return true;
  return false;
}

bool Suppressed(size_t cut, size_t next_start,
                std::span<const CharSpan> protect) {
  for (const CharSpan &span : protect) {
    if (span.start < next_start && span.end > cut) return true;
  }
  return false;
}

}  // namespace

std::vector<CharSpan> SplitSentences(std::u32string_view text,
                                     std::span<const CharSpan> protect) {
  std::vector<CharSpan> sentences;
  const size_t n = text.size();
  size_t start = 0;
  while (start < n && IsSpaceChar(text[start])) ++start;
  if (start == n) return sentences;

  for (size_t i = start; i + 1 < n; ++i) {
    char32_t c = text[i];
    if (c != U'.' && c != U'!' && c != U'?') continue;
    if (!IsSpaceChar(text[i + 1])) continue;
    size_t j = i + 1;
    while (j < n && IsSpaceChar(text[j])) ++j;
    if (j == n || !IsSentenceStart(text[j])) continue;
    if (Suppressed(i + 1, j, protect)) continue;
    sentences.push_back({start, i + 1});
    start = j;
    i = j - 1;
  }
  size_t end = n;
  while (end > start && IsSpaceChar(text[end - 1])) --end;
  if (end > start) sentences.push_back({start, end});
  return sentences;
}

}  // namespace evtrig
