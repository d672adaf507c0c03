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

#ifndef EVTRIG_EVAL_METRICS_H_
#define EVTRIG_EVAL_METRICS_H_

#include <span>
#include <string>
#include <vector>

namespace evtrig {

struct Counts {
  long tp = 0;
  long fp = 0;
  long fn = 0;

  Counts &operator+=(const Counts &o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  bool operator==(const Counts &) const = default;
};

struct Prf {
  double precision = 0;
  double recall = 0;
  double f1 = 0;

  bool operator==(const Prf &) const = default;
};

// Guarded ratios: any zero denominator yields 0.
Prf ComputePrf(const Counts &c);

// Label ids are dense; `deferred` flags labels that were excluded from
// training and are scored as forced false negatives.
struct LabelSpace {
  std::vector<std::string> names;
  int none_id = 0;
  std::vector<bool> deferred;
};

using ConfusionMatrix = std::vector<std::vector<long>>;

struct CategoryScore {
  std::string name;
  Counts counts;
  Prf prf;

  bool operator==(const CategoryScore &) const = default;
};

struct EvalReport {
  std::vector<std::string> labels;
  Counts micro;
  Prf micro_prf;
  std::vector<Counts> per_label;
  std::vector<Prf> per_label_prf;
  std::vector<CategoryScore> categories;  // filled by CategoryRollup
  ConfusionMatrix confusion;
  long tokens = 0;
};

// Token-level scoring over non-None labels. A predicted deferred label is
// read as None; then TP when pred == gold != None, FP when pred != None and
// pred != gold, FN when gold != None and pred != gold. Gold tokens of a
// deferred label therefore always count as one FN each. FN is charged to
// the gold label and FP to the predicted label. Throws LengthMismatch.
EvalReport MicroPrf(std::span<const int> gold, std::span<const int> pred,
                    const LabelSpace &labels);

// Entry (i, j) counts tokens with gold label i predicted as j, over raw
// label ids including None.
ConfusionMatrix ComputeConfusion(std::span<const int> gold,
                                 std::span<const int> pred, size_t num_labels);

}  // namespace evtrig

#endif  // EVTRIG_EVAL_METRICS_H_
