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

#ifndef EVTRIG_MODEL_RNN_H_
#define EVTRIG_MODEL_RNN_H_

#include <string>
#include <vector>

#include "evtrig/autodiff/tape.h"
#include "evtrig/autodiff/tensor.h"
#include "evtrig/model/config.h"
#include "evtrig/model/params.h"

namespace evtrig {

// Pre-activation of one gate: input_weight x + recurrent_weight h + bias,
// with input_weight [hidden x input] and recurrent_weight [hidden x hidden].
struct GateParams {
  ad::Tensor input_weight;
  ad::Tensor recurrent_weight;
  ad::Tensor bias;
};

struct LstmParams {
  GateParams input, forget, output, candidate;
};

struct GruParams {
  GateParams update, reset, candidate;
};

GateParams AddGateParams(ParameterStore &store, const std::string &prefix,
                         int input_dim, int hidden_dim);
LstmParams AddLstmParams(ParameterStore &store, const std::string &prefix,
                         int input_dim, int hidden_dim);
GruParams AddGruParams(ParameterStore &store, const std::string &prefix,
                       int input_dim, int hidden_dim);

struct LstmState {
  ad::Tensor h;
  ad::Tensor c;
};

// i, f, o = sigmoid(.), cand = tanh(.), c = f*c_prev + i*cand,
// h = o*tanh(c).
LstmState LstmStep(ad::Tape &tape, const LstmParams &p, const ad::Tensor &x,
                   const ad::Tensor &h_prev, const ad::Tensor &c_prev);

// z, r = sigmoid(.), cand = tanh(W x + U (r*h_prev) + b),
// h = (1 - z)*h_prev + z*cand.
ad::Tensor GruStep(ad::Tape &tape, const GruParams &p, const ad::Tensor &x,
                   const ad::Tensor &h_prev);

// One direction of a recurrent layer.
class RecurrentCell {
 public:
  RecurrentCell() = default;
  RecurrentCell(ParameterStore &store, const std::string &prefix,
                CellKind kind, int input_dim, int hidden_dim);

  // Hidden state at every position, starting from zero state. With
  // `reverse` the sequence is consumed right to left but the result is
  // still indexed by position.
  std::vector<ad::Tensor> Run(ad::Tape &tape,
                              const std::vector<ad::Tensor> &inputs,
                              bool reverse) const;

  CellKind kind() const { return kind_; }
  int hidden_dim() const { return hidden_dim_; }
  const LstmParams &lstm() const { return lstm_; }
  const GruParams &gru() const { return gru_; }

 private:
  CellKind kind_ = CellKind::kGru;
  int hidden_dim_ = 0;
  LstmParams lstm_;
  GruParams gru_;
};

// g_k = forward_k (+) backward_k. Throws EmptySequence on empty input.
std::vector<ad::Tensor> BiRnn(ad::Tape &tape, const RecurrentCell &forward,
                              const RecurrentCell &backward,
                              const std::vector<ad::Tensor> &inputs);

}  // namespace evtrig

#endif  // EVTRIG_MODEL_RNN_H_
