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


#include "evtrig/model/checkpoint.h"

#include <cstring>
#include <string>
#include <vector>

#include "evtrig/error.h"
#include "evtrig/util/rng.h"
#include "gradient_cases.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace evtrig {
namespace {

using testing::MakeSequence;

struct Fixture {
  Vocabularies vocabs = testing::SyntheticVocabs(9, 3, 4);
  TriggerModel model;

  explicit Fixture(const ModelConfig &config)
      : model(config, vocabs.words().size(), vocabs.entities().size(),
              vocabs.labels().size()) {
    Rng rng(21);
    testing::Randomize(model.params(), rng, 0.7);
  }
};

std::vector<std::vector<double>> Probs(const TriggerModel &model,
                                       const TokenSequence &seq) {
  ad::Tape tape(false);
  Rng unused(0);
  return model.Forward(tape, seq, false, unused).probs;
}

TEST(CheckpointTest, RoundTripIsBitExact) {
  for (CellKind cell : {CellKind::kLstm, CellKind::kGru}) {
    for (FeatureVariant f :
         {FeatureVariant::kWordOnly, FeatureVariant::kWordPlusEntity}) {
      for (HeadVariant h :
           {HeadVariant::kGlobalOnly, HeadVariant::kLocalPlusGlobal}) {
        ModelConfig config = testing::SmallModelConfig(cell, f, h);
        config.seed = 77;
        config.fine_tune_words = false;
        Fixture fx(config);
        std::string bytes = SerializeCheckpoint(fx.model, fx.vocabs);
        LoadedCheckpoint back = ParseCheckpoint(bytes);
        EXPECT_EQ(back.model.config(), config);
        EXPECT_TRUE(back.vocabs == fx.vocabs);
        const auto &want = fx.model.params().entries();
        const auto &got = back.model.params().entries();
        ASSERT_EQ(got.size(), want.size());
        for (size_t i = 0; i < got.size(); ++i) {
          EXPECT_EQ(got[i].name, want[i].name);
          EXPECT_EQ(got[i].tensor.shape(), want[i].tensor.shape());
          EXPECT_EQ(0, std::memcmp(got[i].tensor.values().data(),
                                   want[i].tensor.values().data(),
                                   want[i].tensor.size() * sizeof(double)));
        }
        TokenSequence seq = MakeSequence({2, 8, 5, 0, 1}, {}, {1, 2, 0, 0, 1});
        EXPECT_EQ(Probs(back.model, seq), Probs(fx.model, seq));
        EXPECT_EQ(SerializeCheckpoint(back.model, back.vocabs), bytes);
      }
    }
  }
}

TEST(CheckpointTest, LayoutStartsWithMagicAndVersion) {
  Fixture fx(testing::SmallModelConfig(CellKind::kGru,
                                       FeatureVariant::kWordOnly,
                                       HeadVariant::kGlobalOnly));
  std::string bytes = SerializeCheckpoint(fx.model, fx.vocabs);
  ASSERT_GT(bytes.size(), 16u);
  EXPECT_EQ(bytes.substr(0, 8), "EVTRIGCK");
  EXPECT_EQ(bytes.substr(8, 8), std::string("\x01\0\0\0\0\0\0\0", 8));
}

TEST(CheckpointTest, FileRoundTrip) {
  testing::TempDir dir;
  Fixture fx(testing::SmallModelConfig(CellKind::kLstm,
                                       FeatureVariant::kWordPlusEntity,
                                       HeadVariant::kLocalPlusGlobal));
  std::string path = dir.Sub("model.ckpt");
  SaveCheckpoint(path, fx.model, fx.vocabs);
  LoadedCheckpoint back = LoadCheckpoint(path);
  TokenSequence seq = MakeSequence({3, 4}, {}, {2, 1});
  EXPECT_EQ(back.model.Predict(seq), fx.model.Predict(seq));
  EXPECT_EQ(Probs(back.model, seq), Probs(fx.model, seq));
}

ErrorCode ParseCode(std::string_view bytes) {
  try {
    ParseCheckpoint(bytes);
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::kIoError;
}

TEST(CheckpointTest, RejectsStructuralDamage) {
  Fixture fx(testing::SmallModelConfig(CellKind::kGru,
                                       FeatureVariant::kWordPlusEntity,
                                       HeadVariant::kLocalPlusGlobal));
  std::string bytes = SerializeCheckpoint(fx.model, fx.vocabs);
  EXPECT_EQ(ParseCode(""), ErrorCode::kBadCheckpoint);
  EXPECT_EQ(ParseCode("EVTRIGCX" + bytes.substr(8)), ErrorCode::kBadCheckpoint);
  std::string v2 = bytes;
  v2[8] = 2;
  EXPECT_EQ(ParseCode(v2), ErrorCode::kBadCheckpoint);
  EXPECT_EQ(ParseCode(bytes + "x"), ErrorCode::kBadCheckpoint);
  EXPECT_EQ(ParseCode(bytes.substr(0, bytes.size() - 1)),
            ErrorCode::kBadCheckpoint);
}

// Every prefix and a sample of single-byte corruptions either parse or fail
// with BadCheckpoint; nothing else escapes.
TEST(CheckpointTest, DamagedInputOnlyRaisesBadCheckpoint) {
  Fixture fx(testing::SmallModelConfig(CellKind::kLstm,
                                       FeatureVariant::kWordPlusEntity,
                                       HeadVariant::kGlobalOnly));
  std::string bytes = SerializeCheckpoint(fx.model, fx.vocabs);
  for (size_t n = 0; n < bytes.size(); ++n) {
    ASSERT_EQ(ParseCode(std::string_view(bytes).substr(0, n)),
              ErrorCode::kBadCheckpoint)
        << "prefix " << n;
  }
  Rng rng(22);
  // Corrupt only the header region, where damage is detectable.
  const size_t header = bytes.find("embed.words");
  ASSERT_NE(header, std::string::npos);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string damaged = bytes;
    size_t pos = static_cast<size_t>(rng.Uniform() * header);
    damaged[pos] = static_cast<char>(damaged[pos] ^ (1 + (trial % 255)));
    try {
      ParseCheckpoint(damaged);
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadCheckpoint)
          << "byte " << pos << ": " << e.what();
    } catch (const std::exception &e) {
      ADD_FAILURE() << "byte " << pos << ": " << e.what();
    }
  }
}

}  // namespace
}  // namespace evtrig
