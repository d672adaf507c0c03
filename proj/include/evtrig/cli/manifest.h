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

#ifndef EVTRIG_CLI_MANIFEST_H_
#define EVTRIG_CLI_MANIFEST_H_

#include <map>
#include <string>
#include <string_view>

namespace evtrig {

// Key-value record of everything a working directory holds: the toolkit
// version, effective configurations, seeds and the content hash of every
// input and artifact. Keys are kept sorted so the file is stable.
class RunManifest {
 public:
  static constexpr char kFileName[] = "manifest.txt";

  // Loads <workdir>/manifest.txt, or returns an empty manifest.
  static RunManifest Load(const std::string &workdir);
  static RunManifest Parse(std::string_view text);

  void Set(const std::string &key, const std::string &value);
  // Records "artifact.<relpath> = <content hash>" for a file in `workdir`.
  void RecordArtifact(const std::string &workdir, const std::string &relpath);
  // Drops every key that starts with `prefix`.
  void ClearPrefix(std::string_view prefix);

  const std::string *Find(std::string_view key) const;
  const std::map<std::string, std::string, std::less<>> &entries() const {
    return entries_;
  }

  std::string Format() const;
  void Save(const std::string &workdir) const;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

}  // namespace evtrig

#endif  // EVTRIG_CLI_MANIFEST_H_
