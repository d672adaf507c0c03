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

// Command-line entry point: prepare, train, eval, predict, ablate, stats.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "evtrig/cli/commands.h"
#include "evtrig/cli/config_file.h"
#include "evtrig/error.h"
#include "evtrig/util/strings.h"

namespace {

using evtrig::KeyValues;

// Training flags; each maps onto a config-file key.
struct TrainFlags {
  std::string workdir;
  std::string vectors;
  std::string config_file;
  std::string cell, features, head;
  std::string lr, epochs, seed, runs;
  bool combine_train_dev = false;
  CLI::Option *combine = nullptr;

  void Register(CLI::App *app) {
    app->add_option("--workdir", workdir, "Working directory")->required();
    app->add_option("--vectors", vectors, "Pretrained word2vec file");
    app->add_option("--config", config_file, "key = value config file");
    app->add_option("--cell", cell, "lstm or gru");
    app->add_option("--features", features, "w or we");
    app->add_option("--head", head, "g or lg");
    app->add_option("--lr", lr, "Learning rate");
    app->add_option("--epochs", epochs, "Training epochs");
    app->add_option("--seed", seed, "Random seed");
    app->add_option("--runs", runs, "Independent seeded runs");
    combine = app->add_flag("--combine-train-dev", combine_train_dev,
                            "Retrain on train + dev for the selected epochs");
  }

  // Defaults, then the config file, then flags.
  evtrig::TrainOptions Resolve() const {
    evtrig::TrainOptions options;
    options.workdir = workdir;
    options.vectors_path = vectors;
    if (!config_file.empty()) {
      options.config.Apply(
          evtrig::ParseConfigText(evtrig::ReadFile(config_file)));
    }
    KeyValues flags;
    auto add = [&](const char *key, const std::string &value) {
      if (!value.empty()) flags.emplace_back(key, value);
    };
    add("cell", cell);
    add("features", features);
    add("head", head);
    add("learning_rate", lr);
    add("epochs", epochs);
    add("seed", seed);
    add("runs", runs);
    if (combine->count() > 0) flags.emplace_back("combine_train_dev", "true");
    options.config.Apply(flags);
    options.config.Validate();
    return options;
  }
};

int Fail(const std::string &error_class, const std::string &message) {
  std::string line = message;
  for (char &c : line) {
    if (c == '\n') c = ' ';
  }
  std::cerr << "error: " << error_class << ": " << line << std::endl;
  return 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Biomedical event trigger detection"};
  app.set_version_flag("--version", std::string("evtrig ") + EVTRIG_VERSION);
  app.require_subcommand(1);

  evtrig::PrepareOptions prepare;
  if (const char *root = std::getenv(evtrig::kCorpusRootEnv)) {
    prepare.corpus_dir = root;
  }
  CLI::App *prepare_cmd =
      app.add_subcommand("prepare", "Tokenize and align a standoff corpus");
  prepare_cmd->add_option("--corpus", prepare.corpus_dir,
                          "Corpus root with train/dev/test (default $" +
                              std::string(evtrig::kCorpusRootEnv) + ")");
  prepare_cmd->add_option("--workdir", prepare.workdir, "Working directory")
      ->required();
  prepare_cmd->add_option("--rare-threshold", prepare.rare_threshold,
                          "Defer labels with at most this many test triggers");

  TrainFlags train_flags;
  CLI::App *train_cmd = app.add_subcommand("train", "Train the model");
  train_flags.Register(train_cmd);

  TrainFlags ablate_flags;
  CLI::App *ablate_cmd =
      app.add_subcommand("ablate", "Train and test the four variants");
  ablate_flags.Register(ablate_cmd);

  evtrig::EvalOptions eval;
  CLI::App *eval_cmd = app.add_subcommand("eval", "Evaluate a checkpoint");
  eval_cmd->add_option("--checkpoint", eval.checkpoint)->required();
  eval_cmd->add_option("--dataset", eval.dataset, "Prepared dataset TSV")
      ->required();
  eval_cmd->add_option("--out", eval.out_dir, "Output directory")->required();
  eval_cmd->add_option("--categories", eval.categories_path,
                       "label<TAB>category file");
  eval_cmd->add_option("--workdir", eval.workdir,
                       "Working directory whose manifest records the outputs");

  std::string predict_checkpoint, predict_dataset, predict_output;
  CLI::App *predict_cmd = app.add_subcommand("predict", "Label a dataset");
  predict_cmd->add_option("--checkpoint", predict_checkpoint)->required();
  predict_cmd->add_option("--dataset", predict_dataset)->required();
  predict_cmd->add_option("--output", predict_output)->required();

  std::string stats_workdir;
  CLI::App *stats_cmd = app.add_subcommand("stats", "Corpus statistics");
  stats_cmd->add_option("--workdir", stats_workdir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    Fail("ConfigError", e.what());
    return 2;
  }

  try {
    if (*prepare_cmd) {
      if (prepare.corpus_dir.empty()) {
        throw evtrig::Error(evtrig::ErrorCode::kConfigError,
                            "no corpus given and $" +
                                std::string(evtrig::kCorpusRootEnv) +
                                " is unset");
      }
      evtrig::CmdPrepare(prepare, std::cout);
    } else if (*train_cmd) {
      evtrig::CmdTrain(train_flags.Resolve(), std::cout);
    } else if (*ablate_cmd) {
      evtrig::CmdAblate(ablate_flags.Resolve(), std::cout);
    } else if (*eval_cmd) {
      evtrig::CmdEval(eval, std::cout);
    } else if (*predict_cmd) {
      evtrig::CmdPredict(predict_checkpoint, predict_dataset, predict_output);
    } else if (*stats_cmd) {
      evtrig::CmdStats(stats_workdir, std::cout);
    }
  } catch (const evtrig::Error &e) {
    return Fail(std::string(evtrig::ErrorCodeName(e.code())), e.what());
  } catch (const std::exception &e) {
    return Fail("InternalError", e.what());
  }
  return 0;
}
