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

#ifndef EVTRIG_MODEL_TRIGGER_MODEL_H_
#define EVTRIG_MODEL_TRIGGER_MODEL_H_

#include <vector>

#include "evtrig/autodiff/tape.h"
#include "evtrig/autodiff/tensor.h"
#include "evtrig/corpus/vocab.h"
#include "evtrig/model/config.h"
#include "evtrig/model/head.h"
#include "evtrig/model/params.h"
#include "evtrig/model/rnn.h"
#include "evtrig/util/rng.h"

namespace evtrig {

struct EmbeddingTables {
  ad::Tensor words;     // [n_words x word_dim]
  ad::Tensor entities;  // [n_entities x entity_dim]; undefined for word-only
};

// l_k = word_row(w_k) (+) entity_row(e_k), or just the word row for the
// word-only variant. Throws IndexOutOfRange on a bad id.
std::vector<ad::Tensor> Embed(ad::Tape &tape, const TokenSequence &sequence,
                              const EmbeddingTables &tables,
                              FeatureVariant variant);

// Per-token intermediate values of one forward pass.
struct ForwardTrace {
  std::vector<ad::Tensor> local;   // l
  std::vector<ad::Tensor> global;  // g
  std::vector<ad::Tensor> fused;   // f
  std::vector<ad::Tensor> logits;
  std::vector<std::vector<double>> probs;

  // argmax p(y|x) per token. Labels flagged in `excluded` are never chosen.
  std::vector<int> Predicted(const std::vector<bool> *excluded = nullptr) const;
};

class TriggerModel {
 public:
  TriggerModel(const ModelConfig &config, size_t num_words,
               size_t num_entities, size_t num_labels);

  TriggerModel(const TriggerModel &) = delete;
  TriggerModel &operator=(const TriggerModel &) = delete;
  TriggerModel(TriggerModel &&) = default;
  TriggerModel &operator=(TriggerModel &&) = default;

  // Glorot-uniform matrices, zero biases, U(-0.05, 0.05) embedding rows.
  void Initialize(Rng &rng);

  ForwardTrace Forward(ad::Tape &tape, const TokenSequence &sequence,
                       bool train_mode, Rng &rng) const;

  // Eval-mode prediction without recording gradients.
  std::vector<int> Predict(const TokenSequence &sequence,
                           const std::vector<bool> *excluded = nullptr) const;

  const ModelConfig &config() const { return config_; }
  ParameterStore &params() { return params_; }
  const ParameterStore &params() const { return params_; }
  const EmbeddingTables &tables() const { return tables_; }
  const ClassifierHead &head() const { return head_; }
  const RecurrentCell &forward_cell() const { return forward_; }
  const RecurrentCell &backward_cell() const { return backward_; }
  size_t num_labels() const { return num_labels_; }

 private:
  ModelConfig config_;
  size_t num_labels_;
  ParameterStore params_;
  EmbeddingTables tables_;
  RecurrentCell forward_;
  RecurrentCell backward_;
  ClassifierHead head_;
};

}  // namespace evtrig

#endif  // EVTRIG_MODEL_TRIGGER_MODEL_H_
