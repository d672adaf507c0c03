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

#ifndef EVTRIG_TRAIN_SGD_H_
#define EVTRIG_TRAIN_SGD_H_

#include "evtrig/model/params.h"

namespace evtrig {

struct SgdStepInfo {
  double grad_norm = 0;  // global L2 norm before clipping
  bool clipped = false;
};

// Global L2 norm over the gradients of every trainable tensor.
double GlobalGradNorm(const ParameterStore &params);

// Scales every gradient by clip/norm when the global norm exceeds
// `clip_norm`. Throws NonFiniteGradient on NaN or Inf.
SgdStepInfo ClipGradients(ParameterStore &params, double clip_norm);

// Rescales all gradients by clip/norm when the global norm exceeds
// `clip_norm`, then applies p <- p - lr * grad and zeroes the gradients.
// A non-finite gradient aborts with NonFiniteGradient before any update.
SgdStepInfo SgdStep(ParameterStore &params, double learning_rate,
                    double clip_norm);

}  // namespace evtrig

#endif  // EVTRIG_TRAIN_SGD_H_
