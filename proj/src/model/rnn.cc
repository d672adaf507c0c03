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

#include "evtrig/model/rnn.h"

#include "evtrig/autodiff/ops.h"
#include "evtrig/error.h"

namespace evtrig {

namespace {

ad::Tensor GateInput(ad::Tape &tape, const GateParams &g, const ad::Tensor &x,
                     const ad::Tensor &h) {
  return ad::Add(tape,
                 ad::Add(tape, ad::MatMul(tape, g.input_weight, x),
                         ad::MatMul(tape, g.recurrent_weight, h)),
                 g.bias);
}

void CheckStepShapes(const GateParams &g, const ad::Tensor &x,
                     const ad::Tensor &h) {
  const size_t hidden = g.recurrent_weight.rows();
  if (x.rank() != 1 || x.size() != g.input_weight.cols() || h.rank() != 1 ||
      h.size() != hidden) {
    throw Error(ErrorCode::kShapeMismatch,
                "recurrent step: x " + ad::ShapeString(x.shape()) + ", h " +
                    ad::ShapeString(h.shape()) + " for weights " +
                    ad::ShapeString(g.input_weight.shape()));
  }
}

}  // namespace

GateParams AddGateParams(ParameterStore &store, const std::string &prefix,
                         int input_dim, int hidden_dim) {
  const size_t in = static_cast<size_t>(input_dim);
  const size_t hid = static_cast<size_t>(hidden_dim);
  GateParams g;
  g.input_weight = store.Add(prefix + ".W", {hid, in});
  g.recurrent_weight = store.Add(prefix + ".U", {hid, hid});
  g.bias = store.Add(prefix + ".b", {hid});
  return g;
}

LstmParams AddLstmParams(ParameterStore &store, const std::string &prefix,
                         int input_dim, int hidden_dim) {
  LstmParams p;
  p.input = AddGateParams(store, prefix + ".input_gate", input_dim, hidden_dim);
  p.forget =
      AddGateParams(store, prefix + ".forget_gate", input_dim, hidden_dim);
  p.output =
      AddGateParams(store, prefix + ".output_gate", input_dim, hidden_dim);
  p.candidate =
      AddGateParams(store, prefix + ".candidate", input_dim, hidden_dim);
  return p;
}

GruParams AddGruParams(ParameterStore &store, const std::string &prefix,
                       int input_dim, int hidden_dim) {
  GruParams p;
  p.update =
      AddGateParams(store, prefix + ".update_gate", input_dim, hidden_dim);
  p.reset = AddGateParams(store, prefix + ".reset_gate", input_dim, hidden_dim);
  p.candidate =
      AddGateParams(store, prefix + ".candidate", input_dim, hidden_dim);
  return p;
}

LstmState LstmStep(ad::Tape &tape, const LstmParams &p, const ad::Tensor &x,
                   const ad::Tensor &h_prev, const ad::Tensor &c_prev) {
  CheckStepShapes(p.input, x, h_prev);
  if (c_prev.rank() != 1 || c_prev.size() != h_prev.size()) {
    throw Error(ErrorCode::kShapeMismatch, "lstm step: cell state shape");
  }
  ad::Tensor i = ad::Sigmoid(tape, GateInput(tape, p.input, x, h_prev));
  ad::Tensor f = ad::Sigmoid(tape, GateInput(tape, p.forget, x, h_prev));
  ad::Tensor o = ad::Sigmoid(tape, GateInput(tape, p.output, x, h_prev));
  ad::Tensor cand = ad::Tanh(tape, GateInput(tape, p.candidate, x, h_prev));
  ad::Tensor c = ad::Add(tape, ad::Mul(tape, f, c_prev), ad::Mul(tape, i, cand));
  ad::Tensor h = ad::Mul(tape, o, ad::Tanh(tape, c));
  return {h, c};
}

ad::Tensor GruStep(ad::Tape &tape, const GruParams &p, const ad::Tensor &x,
                   const ad::Tensor &h_prev) {
  CheckStepShapes(p.update, x, h_prev);
  ad::Tensor z = ad::Sigmoid(tape, GateInput(tape, p.update, x, h_prev));
  ad::Tensor r = ad::Sigmoid(tape, GateInput(tape, p.reset, x, h_prev));
  ad::Tensor cand = ad::Tanh(
      tape, GateInput(tape, p.candidate, x, ad::Mul(tape, r, h_prev)));
  static const ad::Tensor kOne = ad::Tensor::Scalar(1.0);
  ad::Tensor keep = ad::Mul(tape, ad::Sub(tape, kOne, z), h_prev);
  return ad::Add(tape, keep, ad::Mul(tape, z, cand));
}

RecurrentCell::RecurrentCell(ParameterStore &store, const std::string &prefix,
                             CellKind kind, int input_dim, int hidden_dim)
    : kind_(kind), hidden_dim_(hidden_dim) {
  if (kind == CellKind::kLstm) {
    lstm_ = AddLstmParams(store, prefix, input_dim, hidden_dim);
  } else {
    gru_ = AddGruParams(store, prefix, input_dim, hidden_dim);
  }
}

std::vector<ad::Tensor> RecurrentCell::Run(
    ad::Tape &tape, const std::vector<ad::Tensor> &inputs,
    bool reverse) const {
  const size_t n = inputs.size();
  const size_t hidden = static_cast<size_t>(hidden_dim_);
  std::vector<ad::Tensor> states(n);
  ad::Tensor h = ad::Tensor::Zeros({hidden});
  ad::Tensor c = ad::Tensor::Zeros({hidden});
  for (size_t step = 0; step < n; ++step) {
    size_t k = reverse ? n - 1 - step : step;
    if (kind_ == CellKind::kLstm) {
      LstmState s = LstmStep(tape, lstm_, inputs[k], h, c);
      h = s.h;
      c = s.c;
    } else {
      h = GruStep(tape, gru_, inputs[k], h);
    }
    states[k] = h;
  }
  return states;
}

std::vector<ad::Tensor> BiRnn(ad::Tape &tape, const RecurrentCell &forward,
                              const RecurrentCell &backward,
                              const std::vector<ad::Tensor> &inputs) {
  if (inputs.empty()) {
    throw Error(ErrorCode::kEmptySequence, "bidirectional RNN on empty input");
  }
  std::vector<ad::Tensor> fwd = forward.Run(tape, inputs, false);
  std::vector<ad::Tensor> bwd = backward.Run(tape, inputs, true);
  std::vector<ad::Tensor> out;
  out.reserve(inputs.size());
  for (size_t k = 0; k < inputs.size(); ++k) {
    out.push_back(ad::Concat(tape, fwd[k], bwd[k]));
  }
  return out;
}

}  // namespace evtrig
