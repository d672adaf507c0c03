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

#ifndef EVTRIG_CLI_CONFIG_FILE_H_
#define EVTRIG_CLI_CONFIG_FILE_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evtrig/model/config.h"
#include "evtrig/train/trainer.h"

namespace evtrig {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Flat "key = value" lines; blank lines and text after '#' are ignored.
// Throws ConfigError naming the line for anything else.
KeyValues ParseConfigText(std::string_view text);

struct RunConfig {
  ModelConfig model;
  TrainConfig train;

  // "seed" sets both the model and the training seed. Unknown keys and bad
  // values throw ConfigError.
  void Set(std::string_view key, std::string_view value);
  void Apply(const KeyValues &entries);
  void Validate() const;

  // Effective configuration in config-file syntax; parses back to *this.
  std::string Format() const;
  KeyValues ToKeyValues() const;
};

}  // namespace evtrig

#endif  // EVTRIG_CLI_CONFIG_FILE_H_
