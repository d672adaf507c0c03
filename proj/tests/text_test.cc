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

#include <string>
#include <vector>

#include "evtrig/util/rng.h"
#include "gtest/gtest.h"

namespace evtrig {
namespace {

std::vector<std::string> Surfaces(const std::vector<TokenSpan> &tokens) {
  std::vector<std::string> out;
  for (const TokenSpan &t : tokens) out.push_back(t.surface);
  return out;
}

TEST(TokenizeTest, SplitsPunctuationFromWords) {
  EXPECT_EQ(Surfaces(Tokenize("VEGF-induced growth.")),
            (std::vector<std::string>{"VEGF", "-", "induced", "growth", "."}));
}

TEST(TokenizeTest, EmptyInput) { EXPECT_TRUE(Tokenize("").empty()); }

TEST(TokenizeTest, AlphanumericRunStaysWhole) {
  EXPECT_EQ(Surfaces(Tokenize("p53")), (std::vector<std::string>{"p53"}));
}

TEST(TokenizeTest, OffsetsAreCodePoints) {
  // "α" is two bytes in UTF-8 but one code point.
  std::vector<TokenSpan> tokens = Tokenize("α-SMA rises");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[0].surface, "α");
  EXPECT_EQ(tokens[0].start, 0u);
  EXPECT_EQ(tokens[0].end, 1u);
  EXPECT_EQ(tokens[2].surface, "SMA");
  EXPECT_EQ(tokens[2].start, 2u);
  EXPECT_EQ(tokens[3].start, 6u);
}

TEST(TokenizeTest, EveryPunctuationCharIsItsOwnToken) {
  EXPECT_EQ(Surfaces(Tokenize("(IL-6);")),
            (std::vector<std::string>{"(", "IL", "-", "6", ")", ";"}));
}

TEST(TokenizeTest, BaseOffsetShiftsSpans) {
  std::u32string text = U"ab cd";
  std::vector<TokenSpan> tokens = Tokenize(text, 10);
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[1].start, 13u);
  EXPECT_EQ(tokens[1].end, 15u);
}

// Concatenating the token surfaces with the skipped whitespace reproduces
// the input, and tokens never contain whitespace.
TEST(TokenizeTest, CoverProperty) {
  const char32_t alphabet[] = {U'a', U'Z', U'7', U' ', U'\t', U'.', U'-',
                               U'(', U'\n', U'β', U'%', U'é'};
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    std::u32string text;
    int n = static_cast<int>(rng.Uniform() * 40);
    for (int i = 0; i < n; ++i) {
      text.push_back(alphabet[static_cast<size_t>(rng.Uniform() * 12)]);
    }
    std::vector<TokenSpan> tokens = Tokenize(text);
    std::u32string rebuilt;
    size_t pos = 0;
    for (const TokenSpan &t : tokens) {
      ASSERT_LE(pos, t.start);
      for (size_t i = pos; i < t.start; ++i) {
        ASSERT_TRUE(IsSpaceChar(text[i]));
        rebuilt.push_back(text[i]);
      }
      std::u32string surface = DecodeUtf8(t.surface);
      ASSERT_EQ(surface, text.substr(t.start, t.end - t.start));
      for (char32_t c : surface) ASSERT_FALSE(IsSpaceChar(c));
      rebuilt += surface;
      pos = t.end;
    }
    for (size_t i = pos; i < text.size(); ++i) {
      ASSERT_TRUE(IsSpaceChar(text[i]));
      rebuilt.push_back(text[i]);
    }
    EXPECT_EQ(rebuilt, text);
  }
}

TEST(Utf8Test, RoundTrip) {
  std::string s = "Ca²⁺ → 𝛼 ok";
  EXPECT_EQ(EncodeUtf8(DecodeUtf8(s)), s);
  EXPECT_EQ(DecodeUtf8("é").size(), 1u);
}

TEST(Utf8Test, InvalidBytesBecomeReplacement) {
  std::u32string out = DecodeUtf8(std::string("a\xff" "b"));
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[1], char32_t{0xFFFD});
  EXPECT_EQ(DecodeUtf8(std::string("\xe2\x82")).size(), 2u);
}

std::vector<std::u32string> Pieces(const std::u32string &text,
                                   const std::vector<CharSpan> &spans) {
  std::vector<std::u32string> out;
  for (const CharSpan &s : spans) {
    out.push_back(text.substr(s.start, s.end - s.start));
  }
  return out;
}

TEST(SplitSentencesTest, TwoSentences) {
  std::u32string text = U"A cat. B dog.";
  EXPECT_EQ(Pieces(text, SplitSentences(text, {})),
            (std::vector<std::u32string>{U"A cat.", U"B dog."}));
}

TEST(SplitSentencesTest, ProtectedSpanSuppressesSplit) {
  std::u32string text = U"E. coli grows.";
  std::vector<CharSpan> protect = {{0, 7}};
  EXPECT_EQ(SplitSentences(text, protect).size(), 1u);
}

TEST(SplitSentencesTest, SuppressionOnlyAppliesInsideSpans) {
  std::u32string text = U"Sp. A1 binds. It grows.";
  EXPECT_EQ(SplitSentences(text, {}).size(), 3u);
  std::vector<CharSpan> protect = {{0, 6}};
  EXPECT_EQ(Pieces(text, SplitSentences(text, protect)),
            (std::vector<std::u32string>{U"Sp. A1 binds.", U"It grows."}));
  // A span that ends exactly at the cut does not suppress it.
  std::vector<CharSpan> before = {{0, 3}};
  EXPECT_EQ(SplitSentences(text, before).size(), 3u);
}

TEST(SplitSentencesTest, NoTerminator) {
  std::u32string text = U"one sentence";
  std::vector<CharSpan> spans = SplitSentences(text, {});
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].start, 0u);
  EXPECT_EQ(spans[0].end, text.size());
}

TEST(SplitSentencesTest, LowercaseContinuationDoesNotSplit) {
  std::u32string text = U"Fig. a shows it. Digits 3 follow! 5 cells? Yes";
  EXPECT_EQ(Pieces(text, SplitSentences(text, {})),
            (std::vector<std::u32string>{U"Fig. a shows it.",
                                         U"Digits 3 follow!", U"5 cells?",
                                         U"Yes"}));
}

TEST(SplitSentencesTest, WhitespaceOnly) {
  EXPECT_TRUE(SplitSentences(U"  \n ", {}).empty());
  EXPECT_TRUE(SplitSentences(U"", {}).empty());
}

TEST(SplitSentencesTest, SpansAreTrimmed) {
  std::u32string text = U"  A b.\n\nC d.  ";
  EXPECT_EQ(Pieces(text, SplitSentences(text, {})),
            (std::vector<std::u32string>{U"A b.", U"C d."}));
}

}  // namespace
}  // namespace evtrig
