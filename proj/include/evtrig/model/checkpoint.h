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

#ifndef EVTRIG_MODEL_CHECKPOINT_H_
#define EVTRIG_MODEL_CHECKPOINT_H_

#include <string>
#include <string_view>

#include "evtrig/corpus/vocab.h"
#include "evtrig/model/config.h"
#include "evtrig/model/trigger_model.h"

namespace evtrig {

// Binary checkpoint, version 1. All integers are little-endian uint64 and
// every value is an IEEE-754 binary64 stored little-endian:
//
//   "EVTRIGCK"                      8-byte magic
//   version                         = 1
//   config_len, config bytes        "key = value" lines (ModelConfig)
//   vocab_len, vocab bytes          Vocabularies::Serialize()
//   tensor_count
//   per tensor, in registration order:
//     name_len, name bytes, rank, dims[rank], values[prod(dims)]
std::string SerializeCheckpoint(const TriggerModel &model,
                                const Vocabularies &vocabs);

struct LoadedCheckpoint {
  Vocabularies vocabs;
  TriggerModel model;
};

// Throws BadCheckpoint on any structural problem.
LoadedCheckpoint ParseCheckpoint(std::string_view bytes);

void SaveCheckpoint(const std::string &path, const TriggerModel &model,
                    const Vocabularies &vocabs);
LoadedCheckpoint LoadCheckpoint(const std::string &path);

}  // namespace evtrig

#endif  // EVTRIG_MODEL_CHECKPOINT_H_
