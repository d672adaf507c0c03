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

#ifndef EVTRIG_MODEL_HEAD_H_
#define EVTRIG_MODEL_HEAD_H_

#include <vector>

#include "evtrig/autodiff/tape.h"
#include "evtrig/autodiff/tensor.h"
#include "evtrig/model/params.h"
#include "evtrig/util/rng.h"

namespace evtrig {

struct DenseLayer {
  ad::Tensor weight;  // [out x in]
  ad::Tensor bias;    // [out]
};

// tanh hidden layers with dropout after each, then a linear output layer
// with one unit per trigger label (None included).
struct ClassifierHead {
  std::vector<DenseLayer> hidden;
  DenseLayer output;
  double dropout_rate = 0.0;
};

ClassifierHead AddClassifierHead(ParameterStore &store, int input_dim,
                                 const std::vector<int> &hidden_dims,
                                 int num_labels, double dropout_rate);

struct HeadOutput {
  ad::Tensor logits;
  std::vector<double> probs;
};

// h_0 = tanh(W_0 f + b_0), h_i = tanh(W_i h_{i-1} + b_i),
// p = softmax(W_o h_last + b_o); dropout on every h_i in train mode.
HeadOutput Classify(ad::Tape &tape, const ClassifierHead &head,
                    const ad::Tensor &fused, Rng &rng, bool train_mode);

}  // namespace evtrig

#endif  // EVTRIG_MODEL_HEAD_H_
