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

#ifndef EVTRIG_CORPUS_STANDOFF_H_
#define EVTRIG_CORPUS_STANDOFF_H_

#include <string>
#include <string_view>
#include <vector>

namespace evtrig {

// One text-bound ("T") annotation. Offsets are code points into the owning
// document's text.
struct SpanAnnotation {
  std::string ann_id;
  std::string label;
  size_t start = 0;
  size_t end = 0;
  std::string surface;

  bool operator==(const SpanAnnotation &) const = default;
};

struct AnnotatedDocument {
  std::string doc_id;
  std::u32string text;
  std::vector<SpanAnnotation> entities;  // T-lines of the .a1 file
  std::vector<SpanAnnotation> triggers;  // T-lines of the .a2 file
};

// Parses a BioNLP standoff triple held in memory. Only T-lines are read;
// event, modification, relation and note lines are skipped. Discontinuous
// spans ("0 4;6 9") are rejected as MalformedLine. Every surface is checked
// against the text (OffsetMismatch) and ids must be unique per document.
AnnotatedDocument ParseStandoff(std::string_view text, std::string_view a1,
                                std::string_view a2,
                                std::string doc_id = "");

// Reads <dir>/<doc_id>.{txt,a1,a2}. A missing file is an IoError naming the
// document; parse errors are rethrown with the file name prefixed.
AnnotatedDocument LoadStandoffDocument(const std::string &dir,
                                       const std::string &doc_id);

// Sorted ids of every *.txt document in `dir`.
std::vector<std::string> ListDocuments(const std::string &dir);

}  // namespace evtrig

#endif  // EVTRIG_CORPUS_STANDOFF_H_
