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

#ifndef EVTRIG_MODEL_CONFIG_H_
#define EVTRIG_MODEL_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evtrig {

enum class CellKind { kLstm, kGru };

// Input features per token: word embedding alone, or word (+) entity type.
enum class FeatureVariant { kWordOnly, kWordPlusEntity };

// Classifier input: RNN state g alone, or g (+) the token's embeddings l.
enum class HeadVariant { kGlobalOnly, kLocalPlusGlobal };

std::string_view CellKindName(CellKind kind);            // lstm | gru
std::string_view FeatureVariantName(FeatureVariant v);   // w | we
std::string_view HeadVariantName(HeadVariant v);         // g | lg
CellKind ParseCellKind(std::string_view s);
FeatureVariant ParseFeatureVariant(std::string_view s);
HeadVariant ParseHeadVariant(std::string_view s);

struct ModelConfig {
  int word_dim = 200;
  int entity_dim = 50;
  int rnn_hidden = 250;
  std::vector<int> hidden_dims = {150, 100};
  double dropout = 0.2;
  CellKind cell = CellKind::kGru;
  FeatureVariant features = FeatureVariant::kWordPlusEntity;
  HeadVariant head = HeadVariant::kLocalPlusGlobal;
  bool fine_tune_words = true;
  uint64_t seed = 1;

  int LocalDim() const;
  int GlobalDim() const { return 2 * rnn_hidden; }
  int FusedDim() const;

  // Throws ConfigError on non-positive dimensions or a rate outside [0, 1).
  void Validate() const;

  // Ordered key = value pairs; the same keys are accepted by Set().
  std::vector<std::pair<std::string, std::string>> ToKeyValues() const;
  // Returns false for keys this struct does not own.
  bool Set(std::string_view key, std::string_view value);

  bool operator==(const ModelConfig &) const = default;
};

}  // namespace evtrig

#endif  // EVTRIG_MODEL_CONFIG_H_
