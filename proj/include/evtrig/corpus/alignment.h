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

#ifndef EVTRIG_CORPUS_ALIGNMENT_H_
#define EVTRIG_CORPUS_ALIGNMENT_H_

#include <string>
#include <vector>

#include "evtrig/corpus/standoff.h"
#include "evtrig/corpus/text.h"

namespace evtrig {

inline constexpr char kNoneLabel[] = "None";

// A token with string-valued entity type and trigger label. This is the
// vocabulary-independent form that prepared datasets store on disk.
struct LabeledToken {
  std::string surface;
  size_t start = 0;
  size_t end = 0;
  std::string entity = kNoneLabel;
  std::string label = kNoneLabel;

  bool operator==(const LabeledToken &) const = default;
};

struct LabeledSentence {
  std::string doc_id;
  int sent_idx = 0;
  std::vector<LabeledToken> tokens;
  bool has_gold = true;

  bool operator==(const LabeledSentence &) const = default;
};

enum class AnnotationKind { kEntity, kTrigger };

// Per-annotation bookkeeping kept alongside a prepared split, so corpus
// statistics can be counted per annotation rather than per token.
struct AnnotationRecord {
  std::string doc_id;
  std::string ann_id;
  AnnotationKind kind = AnnotationKind::kEntity;
  std::string label;
  size_t start = 0;
  size_t end = 0;
  int aligned_tokens = 0;  // tokens that received this annotation's type

  bool operator==(const AnnotationRecord &) const = default;
};

struct AlignedDocument {
  std::vector<LabeledSentence> sentences;
  std::vector<AnnotationRecord> annotations;
};

// Assigns entity types and trigger labels to tokens. A token takes the type
// of any annotation it overlaps; among competing annotations of one kind the
// earliest start wins, then the longer span, then file order. Uncovered
// tokens get None.
AlignedDocument AlignLabels(const AnnotatedDocument &doc,
                            const std::vector<CharSpan> &sentences,
                            const std::vector<std::vector<TokenSpan>> &tokens);

// Sentence split with all annotation spans protected, tokenize, align.
AlignedDocument PrepareDocument(const AnnotatedDocument &doc);

}  // namespace evtrig

#endif  // EVTRIG_CORPUS_ALIGNMENT_H_
