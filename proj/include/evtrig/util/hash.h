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

#ifndef EVTRIG_UTIL_HASH_H_
#define EVTRIG_UTIL_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace evtrig {

// 64-bit FNV-1a. Used for content fingerprints in manifests and for the
// vocabulary compatibility check; not a cryptographic hash.
uint64_t Fingerprint(std::string_view data);
std::string FingerprintHex(std::string_view data);

}  // namespace evtrig

#endif  // EVTRIG_UTIL_HASH_H_
