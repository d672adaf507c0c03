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

#include "evtrig/model/head.h"

#include <string>

#include "evtrig/autodiff/ops.h"
#include "evtrig/error.h"

namespace evtrig {

namespace {

DenseLayer AddDense(ParameterStore &store, const std::string &prefix,
                    int in, int out) {
  DenseLayer layer;
  layer.weight = store.Add(prefix + ".W",
                           {static_cast<size_t>(out), static_cast<size_t>(in)});
  layer.bias = store.Add(prefix + ".b", {static_cast<size_t>(out)});
  return layer;
}

ad::Tensor Affine(ad::Tape &tape, const DenseLayer &layer,
                  const ad::Tensor &x) {
  return ad::Add(tape, ad::MatMul(tape, layer.weight, x), layer.bias);
}

}  // namespace

ClassifierHead AddClassifierHead(ParameterStore &store, int input_dim,
                                 const std::vector<int> &hidden_dims,
                                 int num_labels, double dropout_rate) {
  ClassifierHead head;
  head.dropout_rate = dropout_rate;
  int in = input_dim;
  for (size_t i = 0; i < hidden_dims.size(); ++i) {
    head.hidden.push_back(
        AddDense(store, "head.hidden" + std::to_string(i), in, hidden_dims[i]));
    in = hidden_dims[i];
  }
  head.output = AddDense(store, "head.output", in, num_labels);
  return head;
}

HeadOutput Classify(ad::Tape &tape, const ClassifierHead &head,
                    const ad::Tensor &fused, Rng &rng, bool train_mode) {
  const ad::Tensor &first =
      head.hidden.empty() ? head.output.weight : head.hidden[0].weight;
  if (fused.rank() != 1 || fused.size() != first.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "classifier input " + ad::ShapeString(fused.shape()) +
                    " for first layer " + ad::ShapeString(first.shape()));
  }
  ad::Tensor h = fused;
  for (const DenseLayer &layer : head.hidden) {
    h = ad::Tanh(tape, Affine(tape, layer, h));
    h = ad::Dropout(tape, h, head.dropout_rate, rng, train_mode);
  }
  HeadOutput out;
  out.logits = Affine(tape, head.output, h);
  out.probs = ad::SoftmaxValues(out.logits.values());
  return out;
}

}  // namespace evtrig
