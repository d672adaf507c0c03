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

#include "evtrig/model/trigger_model.h"

#include <cmath>

#include "evtrig/autodiff/ops.h"
#include "evtrig/error.h"

namespace evtrig {

std::vector<ad::Tensor> Embed(ad::Tape &tape, const TokenSequence &sequence,
                              const EmbeddingTables &tables,
                              FeatureVariant variant) {
  std::vector<ad::Tensor> local;
  local.reserve(sequence.tokens.size());
  for (const Token &t : sequence.tokens) {
    ad::Tensor word = ad::Lookup(tape, tables.words, t.word_id);
    if (variant == FeatureVariant::kWordOnly) {
      local.push_back(word);
    } else {
      ad::Tensor entity = ad::Lookup(tape, tables.entities, t.entity_id);
      local.push_back(ad::Concat(tape, word, entity));
    }
  }
  return local;
}

std::vector<int> ForwardTrace::Predicted(
    const std::vector<bool> *excluded) const {
  std::vector<int> out;
  out.reserve(probs.size());
  for (const std::vector<double> &p : probs) {
    int best = -1;
    for (size_t j = 0; j < p.size(); ++j) {
      if (excluded && j < excluded->size() && (*excluded)[j]) continue;
      if (best < 0 || p[j] > p[best]) best = static_cast<int>(j);
    }
    out.push_back(best);
  }
  return out;
}

TriggerModel::TriggerModel(const ModelConfig &config, size_t num_words,
                           size_t num_entities, size_t num_labels)
    : config_(config), num_labels_(num_labels) {
  config_.Validate();
  const size_t wd = static_cast<size_t>(config_.word_dim);
  tables_.words = params_.Add("embed.words", {num_words, wd});
  if (config_.features == FeatureVariant::kWordPlusEntity) {
    tables_.entities = params_.Add(
        "embed.entities", {num_entities, static_cast<size_t>(config_.entity_dim)});
  }
  const int local = config_.LocalDim();
  forward_ = RecurrentCell(params_, "rnn.forward", config_.cell, local,
                           config_.rnn_hidden);
  backward_ = RecurrentCell(params_, "rnn.backward", config_.cell, local,
                            config_.rnn_hidden);
  head_ = AddClassifierHead(params_, config_.FusedDim(), config_.hidden_dims,
                            static_cast<int>(num_labels), config_.dropout);
  if (!config_.fine_tune_words) tables_.words.set_requires_grad(false);
}

void TriggerModel::Initialize(Rng &rng) {
  for (const NamedTensor &e : params_.entries()) {
    ad::Tensor t = e.tensor;
    std::span<double> v = t.values();
    if (t.rank() == 1) {
      std::fill(v.begin(), v.end(), 0.0);
    } else if (t.SameStorage(tables_.words) ||
               (tables_.entities.defined() && t.SameStorage(tables_.entities))) {
      for (double &x : v) x = rng.Uniform(-0.05, 0.05);
    } else {
      double limit = std::sqrt(6.0 / static_cast<double>(t.rows() + t.cols()));
      for (double &x : v) x = rng.Uniform(-limit, limit);
    }
  }
}

ForwardTrace TriggerModel::Forward(ad::Tape &tape,
                                   const TokenSequence &sequence,
                                   bool train_mode, Rng &rng) const {
  if (sequence.tokens.empty()) {
    throw Error(ErrorCode::kEmptySequence,
                "empty sentence " + sequence.doc_id + "/" +
                    std::to_string(sequence.sent_idx));
  }
  ForwardTrace trace;
  trace.local = Embed(tape, sequence, tables_, config_.features);
  trace.global = BiRnn(tape, forward_, backward_, trace.local);
  const size_t n = sequence.tokens.size();
  trace.fused.reserve(n);
  trace.logits.reserve(n);
  trace.probs.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    ad::Tensor f = config_.head == HeadVariant::kLocalPlusGlobal
                       ? ad::Concat(tape, trace.global[k], trace.local[k])
                       : trace.global[k];
    HeadOutput out = Classify(tape, head_, f, rng, train_mode);
    trace.fused.push_back(f);
    trace.logits.push_back(out.logits);
    trace.probs.push_back(std::move(out.probs));
  }
  return trace;
}

std::vector<int> TriggerModel::Predict(const TokenSequence &sequence,
                                       const std::vector<bool> *excluded) const {
  ad::Tape tape(/*recording=*/false);
  Rng unused(0);
  return Forward(tape, sequence, false, unused).Predicted(excluded);
}

}  // namespace evtrig
