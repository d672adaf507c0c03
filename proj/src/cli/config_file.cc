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

#include "evtrig/cli/config_file.h"

#include "evtrig/error.h"
#include "evtrig/util/strings.h"

namespace evtrig {

KeyValues ParseConfigText(std::string_view text) {
  KeyValues entries;
  int line_no = 0;
  for (const std::string &raw : Split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfigError,
                  "config line " + std::to_string(line_no) +
                      ": expected key = value");
    }
    std::string_view key = Trim(line.substr(0, eq));
    std::string_view value = Trim(line.substr(eq + 1));
    if (key.empty()) {
      throw Error(ErrorCode::kConfigError,
                  "config line " + std::to_string(line_no) + ": empty key");
    }
    entries.emplace_back(std::string(key), std::string(value));
  }
  return entries;
}

void RunConfig::Set(std::string_view key, std::string_view value) {
  if (key == "seed") {
    model.Set(key, value);
    train.Set(key, value);
    return;
  }
  if (model.Set(key, value) || train.Set(key, value)) return;
  throw Error(ErrorCode::kConfigError,
              "unknown config key: " + std::string(key));
}

void RunConfig::Apply(const KeyValues &entries) {
  for (const auto &[key, value] : entries) Set(key, value);
}

void RunConfig::Validate() const {
  model.Validate();
  train.Validate();
}

KeyValues RunConfig::ToKeyValues() const {
  KeyValues out = model.ToKeyValues();
  for (auto &kv : train.ToKeyValues()) {
    if (kv.first != "seed") out.push_back(std::move(kv));
  }
  return out;
}

std::string RunConfig::Format() const {
  std::string out;
  for (const auto &[key, value] : ToKeyValues()) {
    out += key + " = " + value + "\n";
  }
  return out;
}

}  // namespace evtrig
