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

#include "evtrig/cli/manifest.h"

#include <filesystem>

#include "evtrig/error.h"
#include "evtrig/util/hash.h"
#include "evtrig/util/strings.h"

namespace evtrig {

namespace fs = std::filesystem;

RunManifest RunManifest::Load(const std::string &workdir) {
  fs::path path = fs::path(workdir) / kFileName;
  if (!fs::exists(path)) return RunManifest();
  return Parse(ReadFile(path.string()));
}

RunManifest RunManifest::Parse(std::string_view text) {
  RunManifest manifest;
  for (const std::string &line : Split(text, '\n')) {
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    size_t eq = view.find('=');
    std::string_view key =
        eq == std::string_view::npos ? view : Trim(view.substr(0, eq));
    if (eq == std::string_view::npos || key.empty()) {
      throw Error(ErrorCode::kConfigError, "bad manifest line: " + line);
    }
    manifest.Set(std::string(key), std::string(Trim(view.substr(eq + 1))));
  }
  return manifest;
}

void RunManifest::Set(const std::string &key, const std::string &value) {
  entries_[key] = value;
}

void RunManifest::RecordArtifact(const std::string &workdir,
                                 const std::string &relpath) {
  std::string contents = ReadFile((fs::path(workdir) / relpath).string());
  Set("artifact." + relpath, FingerprintHex(contents));
}

void RunManifest::ClearPrefix(std::string_view prefix) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (StartsWith(it->first, prefix)) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
}

const std::string *RunManifest::Find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string RunManifest::Format() const {
  std::string out = "# evtrig run manifest\n";
  for (const auto &[key, value] : entries_) {
    out += key + " = " + value + "\n";
  }
  return out;
}

void RunManifest::Save(const std::string &workdir) const {
  WriteFile((fs::path(workdir) / kFileName).string(), Format());
}

}  // namespace evtrig
