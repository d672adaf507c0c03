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

#ifndef EVTRIG_CORPUS_DATASET_H_
#define EVTRIG_CORPUS_DATASET_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evtrig/corpus/alignment.h"

namespace evtrig {

// Prepared dataset: one token per line,
//   doc_id  sent_idx  tok_idx  surface  start  end  entity_type  trigger_label
// tab-separated, with a blank line after every sentence. A trigger_label of
// "_" (or a missing eighth column) marks a sentence without gold labels.
std::string FormatPreparedDataset(std::span<const LabeledSentence> sentences);
std::vector<LabeledSentence> ParsePreparedDataset(std::string_view contents);

// Same layout plus a ninth column with the predicted label.
std::string FormatPredictions(std::span<const LabeledSentence> sentences,
                              const std::vector<std::vector<std::string>> &pred);

// Side file kept next to each prepared split:
//   doc_id  ann_id  entity|trigger  label  start  end  aligned_tokens
std::string FormatAnnotationRecords(std::span<const AnnotationRecord> records);
std::vector<AnnotationRecord> ParseAnnotationRecords(std::string_view contents);

struct CorpusStats {
  std::map<std::string, long> triggers;
  std::map<std::string, long> entities;
};

// Per-annotation counts (a multi-token trigger counts once). With
// `aligned_only`, annotations that no token received are left out.
CorpusStats CountAnnotations(std::span<const AnnotationRecord> records,
                             bool aligned_only);

}  // namespace evtrig

#endif  // EVTRIG_CORPUS_DATASET_H_
