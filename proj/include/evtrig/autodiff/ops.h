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

#ifndef EVTRIG_AUTODIFF_OPS_H_
#define EVTRIG_AUTODIFF_OPS_H_

#include <span>
#include <vector>

#include "evtrig/autodiff/tape.h"
#include "evtrig/autodiff/tensor.h"
#include "evtrig/util/rng.h"

namespace evtrig::ad {

// Matrix [m x k] times vector [k] -> [m], or times matrix [k x n] -> [m x n].
Tensor MatMul(Tape &tape, const Tensor &a, const Tensor &b);

// Elementwise with identical shapes, or with one operand of size 1
// broadcast over the other.
Tensor Add(Tape &tape, const Tensor &a, const Tensor &b);
Tensor Sub(Tape &tape, const Tensor &a, const Tensor &b);
Tensor Mul(Tape &tape, const Tensor &a, const Tensor &b);

// Vectors only: [n] (+) [m] -> [n + m].
Tensor Concat(Tape &tape, const Tensor &a, const Tensor &b);

Tensor Tanh(Tape &tape, const Tensor &a);
Tensor Sigmoid(Tape &tape, const Tensor &a);

Tensor Sum(Tape &tape, const Tensor &a);
Tensor Scale(Tape &tape, const Tensor &a, double factor);

// Row `index` of a [n x d] table as a [d] vector; the backward rule touches
// only that row of the table gradient.
Tensor Lookup(Tape &tape, const Tensor &table, int index);

// Inverted dropout. In train mode each element is zeroed with probability
// `rate` and survivors are scaled by 1/(1 - rate); otherwise the input is
// returned unchanged. Throws InvalidRate unless 0 <= rate < 1.
Tensor Dropout(Tape &tape, const Tensor &a, double rate, Rng &rng,
               bool train_mode);

// Multiplies by a fixed mask of per-element factors (the dropout kernel).
Tensor ApplyMask(Tape &tape, const Tensor &a, std::vector<double> mask);

// -log softmax(logits)[gold] as a scalar, with max-subtraction.
Tensor SoftmaxCrossEntropy(Tape &tape, const Tensor &logits, int gold);

std::vector<double> SoftmaxValues(std::span<const double> logits);

}  // namespace evtrig::ad

#endif  // EVTRIG_AUTODIFF_OPS_H_
