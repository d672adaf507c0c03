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

#ifndef EVTRIG_TRAIN_TRAINER_H_
#define EVTRIG_TRAIN_TRAINER_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evtrig/autodiff/tape.h"
#include "evtrig/corpus/vocab.h"
#include "evtrig/eval/metrics.h"
#include "evtrig/model/params.h"
#include "evtrig/model/trigger_model.h"
#include "evtrig/train/word2vec.h"
#include "evtrig/util/rng.h"

namespace evtrig {

struct TrainConfig {
  double learning_rate = 0.05;
  int epochs = 30;
  double grad_clip_norm = 5.0;
  uint64_t seed = 1;
  int runs = 5;
  bool shuffle = true;
  // Select the epoch count on dev, then retrain on train + dev for that
  // many epochs and keep the final parameters.
  bool combine_train_dev = false;

  void Validate() const;  // ConfigError
  std::vector<std::pair<std::string, std::string>> ToKeyValues() const;
  bool Set(std::string_view key, std::string_view value);

  bool operator==(const TrainConfig &) const = default;
};

struct EpochRecord {
  int epoch = 0;
  double mean_loss = 0;
  Prf dev;

  bool operator==(const EpochRecord &) const = default;
};

struct TrainResult {
  ParameterStore best;  // parameter values at best_epoch
  int best_epoch = 0;
  double best_dev_f1 = 0;
  std::vector<EpochRecord> log;
};

// Called after every epoch with the model in its end-of-epoch state;
// returning false stops training.
using EpochCallback =
    std::function<bool(const EpochRecord &, const TriggerModel &)>;

// Mean token cross-entropy of one sentence.
ad::Tensor SentenceLoss(ad::Tape &tape, const TriggerModel &model,
                        const TokenSequence &sequence, Rng &rng,
                        bool train_mode = true);

LabelSpace MakeLabelSpace(const Vocabularies &vocabs);

// Eval-mode predictions; deferred labels are never predicted.
std::vector<std::vector<int>> PredictAll(
    const TriggerModel &model, std::span<const TokenSequence> sequences,
    const Vocabularies &vocabs);

// Micro scoring of predictions against gold label ids.
EvalReport ScorePredictions(std::span<const TokenSequence> sequences,
                            const std::vector<std::vector<int>> &predictions,
                            const Vocabularies &vocabs);

EvalReport EvaluateModel(const TriggerModel &model,
                         std::span<const TokenSequence> sequences,
                         const Vocabularies &vocabs);

// Per-sentence SGD. Gold tokens of deferred labels are trained as None.
// Each epoch shuffles (seeded), updates after every sentence, then scores
// `dev` in eval mode. The best epoch by dev micro-F1 (earliest on ties) is
// returned; with an empty dev set the last epoch wins. Throws EmptyTrainSet.
TrainResult Train(TriggerModel &model, std::span<const TokenSequence> train,
                  std::span<const TokenSequence> dev,
                  const Vocabularies &vocabs, const TrainConfig &config,
                  const EpochCallback &on_epoch = {});

// Tab-separated: epoch, mean_train_loss, dev_precision, dev_recall, dev_f1.
std::string FormatTrainLog(const std::vector<EpochRecord> &log);

TriggerModel BuildModel(const ModelConfig &config, const Vocabularies &vocabs,
                        const PretrainedVectors *vectors);

struct RunOutcome {
  uint64_t seed = 0;
  TrainResult train;
  EvalReport test;
};

// One seeded run: model and training seeds are both set to `seed`.
RunOutcome TrainOneRun(ModelConfig model_config, TrainConfig train_config,
                       uint64_t seed, const Vocabularies &vocabs,
                       std::span<const TokenSequence> train,
                       std::span<const TokenSequence> dev,
                       std::span<const TokenSequence> test,
                       const PretrainedVectors *vectors);

struct MultiRunSummary {
  std::vector<RunOutcome> runs;
  size_t best = 0;  // index of the highest test F1 (earliest on ties)
  double mean_f1 = 0;
  double stddev_f1 = 0;  // sample standard deviation; 0 for a single run
};

// Runs seeds config.seed + 0 ... config.seed + runs - 1.
MultiRunSummary MultiRun(const ModelConfig &model_config,
                         const TrainConfig &train_config,
                         const Vocabularies &vocabs,
                         std::span<const TokenSequence> train,
                         std::span<const TokenSequence> dev,
                         std::span<const TokenSequence> test,
                         const PretrainedVectors *vectors);

}  // namespace evtrig

#endif  // EVTRIG_TRAIN_TRAINER_H_
