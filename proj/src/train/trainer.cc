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

#include "evtrig/train/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "evtrig/autodiff/ops.h"
#include "evtrig/error.h"
#include "evtrig/train/sgd.h"
#include "evtrig/util/strings.h"

namespace evtrig {

void TrainConfig::Validate() const {
  if (!(learning_rate > 0)) {
    throw Error(ErrorCode::kConfigError, "learning_rate must be positive");
  }
  if (epochs < 1) throw Error(ErrorCode::kConfigError, "epochs must be >= 1");
  if (runs < 1) throw Error(ErrorCode::kConfigError, "runs must be >= 1");
  if (!(grad_clip_norm > 0)) {
    throw Error(ErrorCode::kConfigError, "grad_clip_norm must be positive");
  }
}

std::vector<std::pair<std::string, std::string>> TrainConfig::ToKeyValues()
    const {
  return {
      {"learning_rate", FormatExact(learning_rate)},
      {"epochs", std::to_string(epochs)},
      {"grad_clip_norm", FormatExact(grad_clip_norm)},
      {"seed", std::to_string(seed)},
      {"runs", std::to_string(runs)},
      {"shuffle", shuffle ? "true" : "false"},
      {"combine_train_dev", combine_train_dev ? "true" : "false"},
  };
}

bool TrainConfig::Set(std::string_view key, std::string_view value) {
  auto number = [&](auto parse) {
    try {
      return parse();
    } catch (const Error &) {
      throw Error(ErrorCode::kConfigError, "bad value for " +
                                               std::string(key) + ": " +
                                               std::string(value));
    }
  };
  if (key == "learning_rate") {
    learning_rate = number([&] { return ParseDouble(value, key); });
  } else if (key == "epochs") {
    epochs = static_cast<int>(number([&] { return ParseLong(value, key); }));
  } else if (key == "grad_clip_norm") {
    grad_clip_norm = number([&] { return ParseDouble(value, key); });
  } else if (key == "seed") {
    seed = static_cast<uint64_t>(number([&] { return ParseLong(value, key); }));
  } else if (key == "runs") {
    runs = static_cast<int>(number([&] { return ParseLong(value, key); }));
  } else if (key == "shuffle") {
    shuffle = ParseBool(value);
  } else if (key == "combine_train_dev") {
    combine_train_dev = ParseBool(value);
  } else {
    return false;
  }
  return true;
}

ad::Tensor SentenceLoss(ad::Tape &tape, const TriggerModel &model,
                        const TokenSequence &sequence, Rng &rng,
                        bool train_mode) {
  ForwardTrace trace = model.Forward(tape, sequence, train_mode, rng);
  ad::Tensor total;
  for (size_t k = 0; k < sequence.tokens.size(); ++k) {
    ad::Tensor loss = ad::SoftmaxCrossEntropy(tape, trace.logits[k],
                                              sequence.tokens[k].label_id);
    total = total.defined() ? ad::Add(tape, total, loss) : loss;
  }
  return ad::Scale(tape, total,
                   1.0 / static_cast<double>(sequence.tokens.size()));
}

LabelSpace MakeLabelSpace(const Vocabularies &vocabs) {
  LabelSpace space;
  space.names = vocabs.labels().items();
  space.none_id = Vocabularies::kNone;
  space.deferred = vocabs.deferred_mask();
  return space;
}

std::vector<std::vector<int>> PredictAll(
    const TriggerModel &model, std::span<const TokenSequence> sequences,
    const Vocabularies &vocabs) {
  std::vector<std::vector<int>> out;
  out.reserve(sequences.size());
  for (const TokenSequence &s : sequences) {
    out.push_back(model.Predict(s, &vocabs.deferred_mask()));
  }
  return out;
}

EvalReport ScorePredictions(std::span<const TokenSequence> sequences,
                            const std::vector<std::vector<int>> &predictions,
                            const Vocabularies &vocabs) {
  if (predictions.size() != sequences.size()) {
    throw Error(ErrorCode::kLengthMismatch, "prediction count differs");
  }
  std::vector<int> gold, pred;
  for (size_t s = 0; s < sequences.size(); ++s) {
    if (predictions[s].size() != sequences[s].tokens.size()) {
      throw Error(ErrorCode::kLengthMismatch, "prediction length differs");
    }
    for (const Token &t : sequences[s].tokens) gold.push_back(t.label_id);
    pred.insert(pred.end(), predictions[s].begin(), predictions[s].end());
  }
  return MicroPrf(gold, pred, MakeLabelSpace(vocabs));
}

EvalReport EvaluateModel(const TriggerModel &model,
                         std::span<const TokenSequence> sequences,
                         const Vocabularies &vocabs) {
  return ScorePredictions(sequences, PredictAll(model, sequences, vocabs),
                          vocabs);
}

TrainResult Train(TriggerModel &model, std::span<const TokenSequence> train,
                  std::span<const TokenSequence> dev,
                  const Vocabularies &vocabs, const TrainConfig &config,
                  const EpochCallback &on_epoch) {
  config.Validate();
  std::vector<TokenSequence> targets;
  for (const TokenSequence &s : train) {
    if (!s.tokens.empty()) targets.push_back(RelabelDeferred(s, vocabs));
  }
  if (targets.empty()) {
    throw Error(ErrorCode::kEmptyTrainSet, "no training sentences");
  }

  Rng rng(config.seed);
  std::vector<size_t> order(targets.size());
  std::iota(order.begin(), order.end(), 0);
  ParameterStore &params = model.params();
  params.ZeroGrad();

  TrainResult result;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    if (config.shuffle) std::shuffle(order.begin(), order.end(), rng.engine());
    double total = 0;
    for (size_t idx : order) {
      ad::Tape tape;
      ad::Tensor loss = SentenceLoss(tape, model, targets[idx], rng, true);
      total += loss.item();
      tape.Backward(loss);
      SgdStep(params, config.learning_rate, config.grad_clip_norm);
    }
    EpochRecord record;
    record.epoch = epoch;
    record.mean_loss = total / static_cast<double>(targets.size());
    if (!dev.empty()) record.dev = EvaluateModel(model, dev, vocabs).micro_prf;
    result.log.push_back(record);

    if (dev.empty() || epoch == 1 || record.dev.f1 > result.best_dev_f1) {
      result.best = params.Snapshot();
      result.best_epoch = epoch;
      result.best_dev_f1 = record.dev.f1;
    }
    if (on_epoch && !on_epoch(record, model)) break;
  }
  return result;
}

std::string FormatTrainLog(const std::vector<EpochRecord> &log) {
  std::ostringstream out;
  out << "epoch\tmean_train_loss\tdev_precision\tdev_recall\tdev_f1\n";
  for (const EpochRecord &r : log) {
    out << r.epoch << '\t' << FormatExact(r.mean_loss) << '\t'
        << FormatExact(r.dev.precision) << '\t' << FormatExact(r.dev.recall)
        << '\t' << FormatExact(r.dev.f1) << '\n';
  }
  return out.str();
}

TriggerModel BuildModel(const ModelConfig &config, const Vocabularies &vocabs,
                        const PretrainedVectors *vectors) {
  TriggerModel model(config, vocabs.words().size(), vocabs.entities().size(),
                     vocabs.labels().size());
  Rng rng(config.seed);
  model.Initialize(rng);
  if (vectors != nullptr) InitWordEmbeddings(model, vocabs, *vectors);
  return model;
}

RunOutcome TrainOneRun(ModelConfig model_config, TrainConfig train_config,
                       uint64_t seed, const Vocabularies &vocabs,
                       std::span<const TokenSequence> train,
                       std::span<const TokenSequence> dev,
                       std::span<const TokenSequence> test,
                       const PretrainedVectors *vectors) {
  model_config.seed = seed;
  train_config.seed = seed;
  RunOutcome outcome;
  outcome.seed = seed;

  TriggerModel model = BuildModel(model_config, vocabs, vectors);
  outcome.train = Train(model, train, dev, vocabs, train_config);

  if (train_config.combine_train_dev) {
    std::vector<TokenSequence> combined(train.begin(), train.end());
    combined.insert(combined.end(), dev.begin(), dev.end());
    TrainConfig final_config = train_config;
    final_config.epochs = outcome.train.best_epoch;
    TriggerModel final_model = BuildModel(model_config, vocabs, vectors);
    TrainResult final_result =
        Train(final_model, combined, {}, vocabs, final_config);
    final_result.log.insert(final_result.log.begin(),
                            outcome.train.log.begin(), outcome.train.log.end());
    final_result.best_dev_f1 = outcome.train.best_dev_f1;
    outcome.train = std::move(final_result);
    model = std::move(final_model);
  }
  model.params().LoadValues(outcome.train.best);
  if (!test.empty()) outcome.test = EvaluateModel(model, test, vocabs);
  return outcome;
}

MultiRunSummary MultiRun(const ModelConfig &model_config,
                         const TrainConfig &train_config,
                         const Vocabularies &vocabs,
                         std::span<const TokenSequence> train,
                         std::span<const TokenSequence> dev,
                         std::span<const TokenSequence> test,
                         const PretrainedVectors *vectors) {
  train_config.Validate();
  MultiRunSummary summary;
  for (int i = 0; i < train_config.runs; ++i) {
    summary.runs.push_back(TrainOneRun(model_config, train_config,
                                       train_config.seed + i, vocabs, train,
                                       dev, test, vectors));
  }
  const size_t n = summary.runs.size();
  double sum = 0;
  for (size_t i = 0; i < n; ++i) {
    double f1 = summary.runs[i].test.micro_prf.f1;
    sum += f1;
    if (f1 > summary.runs[summary.best].test.micro_prf.f1) summary.best = i;
  }
  summary.mean_f1 = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0;
    for (const RunOutcome &r : summary.runs) {
      double d = r.test.micro_prf.f1 - summary.mean_f1;
      ss += d * d;
    }
    summary.stddev_f1 = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return summary;
}

}  // namespace evtrig
