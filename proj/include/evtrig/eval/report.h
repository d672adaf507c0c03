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

#ifndef EVTRIG_EVAL_REPORT_H_
#define EVTRIG_EVAL_REPORT_H_

#include <string>
#include <string_view>

#include "evtrig/eval/metrics.h"

namespace evtrig {

// Percentage with two decimals: 0.791132 -> "79.11".
std::string Percent(double fraction);

// Human-readable tables: overall, per category (if rolled up), per label.
std::string RenderReport(const EvalReport &report);

// Flat "key=value" record, one metric per line, with full-precision reals
// and every count. ParseReportRecord restores everything but the confusion
// matrix, which travels as its own TSV.
std::string FormatReportRecord(const EvalReport &report);
EvalReport ParseReportRecord(std::string_view text);

// Labeled square matrix, gold labels as rows and predictions as columns.
std::string FormatConfusionTsv(const EvalReport &report);
ConfusionMatrix ParseConfusionTsv(std::string_view text);

}  // namespace evtrig

#endif  // EVTRIG_EVAL_REPORT_H_
