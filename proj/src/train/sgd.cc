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

#include "evtrig/train/sgd.h"

#include <cmath>

#include "evtrig/error.h"

namespace evtrig {

double GlobalGradNorm(const ParameterStore &params) {
  double sq = 0;
  for (const NamedTensor &e : params.entries()) {
    if (!e.tensor.requires_grad()) continue;
    for (double g : e.tensor.grad()) sq += g * g;
  }
  return std::sqrt(sq);
}

SgdStepInfo ClipGradients(ParameterStore &params, double clip_norm) {
  SgdStepInfo info;
  info.grad_norm = GlobalGradNorm(params);
  if (!std::isfinite(info.grad_norm)) {
    for (const NamedTensor &e : params.entries()) {
      if (!e.tensor.requires_grad()) continue;
      for (double g : e.tensor.grad()) {
        if (!std::isfinite(g)) {
          throw Error(ErrorCode::kNonFiniteGradient,
                      "non-finite gradient in " + e.name);
        }
      }
    }
    throw Error(ErrorCode::kNonFiniteGradient, "gradient norm overflowed");
  }
  if (info.grad_norm > clip_norm) {
    const double scale = clip_norm / info.grad_norm;
    info.clipped = true;
    for (const NamedTensor &e : params.entries()) {
      ad::Tensor t = e.tensor;
      if (!t.requires_grad()) continue;
      for (double &g : t.grad()) g *= scale;
    }
  }
  return info;
}

SgdStepInfo SgdStep(ParameterStore &params, double learning_rate,
                    double clip_norm) {
  SgdStepInfo info = ClipGradients(params, clip_norm);
  for (const NamedTensor &e : params.entries()) {
    ad::Tensor t = e.tensor;
    if (!t.requires_grad()) continue;
    std::span<double> v = t.values();
    std::span<double> g = t.grad();
    for (size_t i = 0; i < v.size(); ++i) {
      v[i] -= learning_rate * g[i];
      g[i] = 0.0;
    }
  }
  return info;
}

}  // namespace evtrig
