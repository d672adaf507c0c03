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

#ifndef EVTRIG_UTIL_STRINGS_H_
#define EVTRIG_UTIL_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace evtrig {

std::vector<std::string> Split(std::string_view s, char delim);
std::string_view Trim(std::string_view s);

// ASCII-only lowercasing; multi-byte UTF-8 sequences pass through unchanged.
std::string AsciiLower(std::string_view s);

bool StartsWith(std::string_view s, std::string_view prefix);

// Strict numeric parsers. Throw Error(kMalformedLine) naming `what`.
long ParseLong(std::string_view s, std::string_view what);
double ParseDouble(std::string_view s, std::string_view what);

// true/false, 1/0, yes/no, on/off. Throws Error(kConfigError).
bool ParseBool(std::string_view s);

// Shortest decimal text that parses back to the same double.
std::string FormatExact(double v);

std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);

}  // namespace evtrig

#endif  // EVTRIG_UTIL_STRINGS_H_
