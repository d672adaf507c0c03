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

#include "evtrig/model/config.h"

#include "evtrig/error.h"
#include "evtrig/util/strings.h"

namespace evtrig {

std::string_view CellKindName(CellKind kind) {
  return kind == CellKind::kLstm ? "lstm" : "gru";
}

std::string_view FeatureVariantName(FeatureVariant v) {
  return v == FeatureVariant::kWordOnly ? "w" : "we";
}

std::string_view HeadVariantName(HeadVariant v) {
  return v == HeadVariant::kGlobalOnly ? "g" : "lg";
}

CellKind ParseCellKind(std::string_view s) {
  if (s == "lstm") return CellKind::kLstm;
  if (s == "gru") return CellKind::kGru;
  throw Error(ErrorCode::kConfigError, "cell must be lstm or gru, got " +
                                           std::string(s));
}

FeatureVariant ParseFeatureVariant(std::string_view s) {
  if (s == "w") return FeatureVariant::kWordOnly;
  if (s == "we") return FeatureVariant::kWordPlusEntity;
  throw Error(ErrorCode::kConfigError, "features must be w or we, got " +
                                           std::string(s));
}

HeadVariant ParseHeadVariant(std::string_view s) {
  if (s == "g") return HeadVariant::kGlobalOnly;
  if (s == "lg") return HeadVariant::kLocalPlusGlobal;
  throw Error(ErrorCode::kConfigError, "head must be g or lg, got " +
                                           std::string(s));
}

int ModelConfig::LocalDim() const {
  return features == FeatureVariant::kWordPlusEntity ? word_dim + entity_dim
                                                     : word_dim;
}

int ModelConfig::FusedDim() const {
  return head == HeadVariant::kLocalPlusGlobal ? GlobalDim() + LocalDim()
                                               : GlobalDim();
}

void ModelConfig::Validate() const {
  auto positive = [](int v, const char *name) {
    if (v <= 0) {
      throw Error(ErrorCode::kConfigError,
                  std::string(name) + " must be positive");
    }
  };
  positive(word_dim, "word_dim");
  if (features == FeatureVariant::kWordPlusEntity) {
    positive(entity_dim, "entity_dim");
  }
  positive(rnn_hidden, "rnn_hidden");
  for (int d : hidden_dims) positive(d, "hidden_dims entry");
  if (!(dropout >= 0.0 && dropout < 1.0)) {
    throw Error(ErrorCode::kConfigError, "dropout must be in [0, 1)");
  }
}

std::vector<std::pair<std::string, std::string>> ModelConfig::ToKeyValues()
    const {
  std::string dims;
  for (size_t i = 0; i < hidden_dims.size(); ++i) {
    if (i) dims += ",";
    dims += std::to_string(hidden_dims[i]);
  }
  return {
      {"word_dim", std::to_string(word_dim)},
      {"entity_dim", std::to_string(entity_dim)},
      {"rnn_hidden", std::to_string(rnn_hidden)},
      {"hidden_dims", dims},
      {"dropout", FormatExact(dropout)},
      {"cell", std::string(CellKindName(cell))},
      {"features", std::string(FeatureVariantName(features))},
      {"head", std::string(HeadVariantName(head))},
      {"fine_tune_words", fine_tune_words ? "true" : "false"},
      {"seed", std::to_string(seed)},
  };
}

namespace {

int ParseInt(std::string_view v, std::string_view key) {
  try {
    return static_cast<int>(ParseLong(v, key));
  } catch (const Error &) {
    throw Error(ErrorCode::kConfigError,
                "bad integer for " + std::string(key) + ": " + std::string(v));
  }
}

}  // namespace

bool ModelConfig::Set(std::string_view key, std::string_view value) {
  if (key == "word_dim") {
    word_dim = ParseInt(value, key);
  } else if (key == "entity_dim") {
    entity_dim = ParseInt(value, key);
  } else if (key == "rnn_hidden") {
    rnn_hidden = ParseInt(value, key);
  } else if (key == "hidden_dims") {
    hidden_dims.clear();
    if (!Trim(value).empty()) {
      for (const std::string &d : Split(value, ',')) {
        hidden_dims.push_back(ParseInt(Trim(d), key));
      }
    }
  } else if (key == "dropout") {
    try {
      dropout = ParseDouble(value, key);
    } catch (const Error &) {
      throw Error(ErrorCode::kConfigError, "bad dropout " + std::string(value));
    }
  } else if (key == "cell") {
    cell = ParseCellKind(value);
  } else if (key == "features") {
    features = ParseFeatureVariant(value);
  } else if (key == "head") {
    head = ParseHeadVariant(value);
  } else if (key == "fine_tune_words") {
    fine_tune_words = ParseBool(value);
  } else if (key == "seed") {
    seed = static_cast<uint64_t>(ParseInt(value, key));
  } else {
    return false;
  }
  return true;
}

}  // namespace evtrig
