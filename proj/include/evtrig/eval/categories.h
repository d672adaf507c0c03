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

#ifndef EVTRIG_EVAL_CATEGORIES_H_
#define EVTRIG_EVAL_CATEGORIES_H_

#include <string>
#include <string_view>
#include <vector>

#include "evtrig/eval/metrics.h"

namespace evtrig {

struct CategoryEntry {
  std::string label;         // corpus type name, e.g. Blood_vessel_development
  std::string display;       // e.g. Blood Vessel Development
  std::string abbreviation;  // e.g. BVD
  std::string category;      // e.g. Anatomical
};

// Label -> category assignment. Categories keep their first-seen order.
class CategoryMap {
 public:
  CategoryMap() = default;
  explicit CategoryMap(std::vector<CategoryEntry> entries);

  // The 19 MLEE trigger types in 4 categories.
  static CategoryMap MleeTriggers();
  // The 14 MLEE entity types in 3 categories.
  static CategoryMap MleeEntities();
  // Tab-separated "label<TAB>category" lines.
  static CategoryMap Parse(std::string_view text);

  const CategoryEntry *Find(std::string_view label) const;
  const std::vector<CategoryEntry> &entries() const { return entries_; }
  std::vector<std::string> Categories() const;

 private:
  std::vector<CategoryEntry> entries_;
};

// Sums TP/FP/FN per category over the report's non-None labels and appends
// an "Overall" row; the result is also stored in report->categories.
// Throws UnmappedLabel when a label has no category.
std::vector<CategoryScore> CategoryRollup(EvalReport *report,
                                          const CategoryMap &map);

}  // namespace evtrig

#endif  // EVTRIG_EVAL_CATEGORIES_H_
