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

#include "evtrig/eval/metrics.h"

#include "evtrig/error.h"

namespace evtrig {

Prf ComputePrf(const Counts &c) {
  Prf p;
  if (c.tp + c.fp > 0) p.precision = static_cast<double>(c.tp) / (c.tp + c.fp);
  if (c.tp + c.fn > 0) p.recall = static_cast<double>(c.tp) / (c.tp + c.fn);
  if (p.precision + p.recall > 0) {
    p.f1 = 2 * p.precision * p.recall / (p.precision + p.recall);
  }
  return p;
}

namespace {

void CheckLengths(std::span<const int> gold, std::span<const int> pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " labels, prediction " + std::to_string(pred.size()));
  }
}

void CheckId(int id, size_t n) {
  if (id < 0 || static_cast<size_t>(id) >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "label id " + std::to_string(id) + " out of range");
  }
}

}  // namespace

EvalReport MicroPrf(std::span<const int> gold, std::span<const int> pred,
                    const LabelSpace &labels) {
  CheckLengths(gold, pred);
  const size_t n = labels.names.size();
  auto deferred = [&](int id) {
    return static_cast<size_t>(id) < labels.deferred.size() &&
           labels.deferred[id];
  };

  EvalReport report;
  report.labels = labels.names;
  report.per_label.assign(n, Counts());
  report.tokens = static_cast<long>(gold.size());
  for (size_t i = 0; i < gold.size(); ++i) {
    int g = gold[i];
    int p = pred[i];
    CheckId(g, n);
    CheckId(p, n);
    if (deferred(p)) p = labels.none_id;
    if (p == g) {
      if (g != labels.none_id) ++report.per_label[g].tp;
      continue;
    }
    if (p != labels.none_id) ++report.per_label[p].fp;
    if (g != labels.none_id) ++report.per_label[g].fn;
  }
  for (size_t l = 0; l < n; ++l) {
    if (static_cast<int>(l) == labels.none_id) continue;
    report.micro += report.per_label[l];
  }
  report.micro_prf = ComputePrf(report.micro);
  for (const Counts &c : report.per_label) {
    report.per_label_prf.push_back(ComputePrf(c));
  }
  report.confusion = ComputeConfusion(gold, pred, n);
  return report;
}

ConfusionMatrix ComputeConfusion(std::span<const int> gold,
                                 std::span<const int> pred,
                                 size_t num_labels) {
  CheckLengths(gold, pred);
  ConfusionMatrix m(num_labels, std::vector<long>(num_labels, 0));
  for (size_t i = 0; i < gold.size(); ++i) {
    CheckId(gold[i], num_labels);
    CheckId(pred[i], num_labels);
    ++m[gold[i]][pred[i]];
  }
  return m;
}

}  // namespace evtrig
