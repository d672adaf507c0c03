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

#ifndef EVTRIG_CLI_COMMANDS_H_
#define EVTRIG_CLI_COMMANDS_H_

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "evtrig/cli/config_file.h"
#include "evtrig/corpus/dataset.h"
#include "evtrig/corpus/vocab.h"
#include "evtrig/eval/metrics.h"
#include "evtrig/model/config.h"
#include "evtrig/train/trainer.h"

namespace evtrig {

// Working directory layout.
inline constexpr char kPreparedDir[] = "prepared";
inline constexpr char kCheckpointDir[] = "checkpoints";
inline constexpr char kReportDir[] = "reports";
inline constexpr char kLogDir[] = "logs";
inline constexpr char kVocabFile[] = "vocab.tsv";
inline constexpr char kDeferredFile[] = "deferred.txt";
inline constexpr const char *kSplits[] = {"train", "dev", "test"};

// Environment variable holding the default corpus root for prepare.
inline constexpr char kCorpusRootEnv[] = "EVTRIG_CORPUS_ROOT";

// Locates <corpus_dir>/<split>; "dev" also accepts "devel". IoError when
// no directory exists.
std::string CorpusSplitDir(const std::string &corpus_dir,
                           const std::string &split);

struct PrepareOptions {
  std::string corpus_dir;
  std::string workdir;
  long rare_threshold = 10;
};

// Parses, splits, tokenizes and aligns the train/dev/test standoff
// directories. Vocabularies are built from train + dev; labels with at most
// `rare_threshold` test annotations are deferred.
void CmdPrepare(const PrepareOptions &options, std::ostream &out);

struct PreparedData {
  Vocabularies vocabs;
  std::vector<TokenSequence> train;
  std::vector<TokenSequence> dev;
  std::vector<TokenSequence> test;
};

// Reads the prepared datasets and vocabulary; IoError names missing files.
PreparedData LoadPrepared(const std::string &workdir);

struct TrainOptions {
  std::string workdir;
  std::string vectors_path;  // empty: random word embeddings
  RunConfig config;
};

// Trains config.train.runs seeded runs and writes one checkpoint and epoch
// log per run, checkpoints/best.ckpt and reports/train_summary.txt.
MultiRunSummary CmdTrain(const TrainOptions &options, std::ostream &out);

struct EvalOptions {
  std::string checkpoint;
  std::string dataset;  // prepared TSV; vocab.tsv must sit beside it
  std::string out_dir;
  std::string categories_path;  // empty: built-in MLEE trigger categories
  std::string workdir;          // optional; artifacts under it are recorded
};

// Writes predictions.tsv and, when the dataset carries gold labels,
// report.txt, report.record, confusion.tsv and categories.tsv.
// Throws VocabularyMismatch when the checkpoint was built from a different
// vocabulary than the dataset.
void CmdEval(const EvalOptions &options, std::ostream &out);

// Predictions only, written to `output`.
void CmdPredict(const std::string &checkpoint, const std::string &dataset,
                const std::string &output);

struct AblationRow {
  int index = 0;
  FeatureVariant features = FeatureVariant::kWordOnly;
  HeadVariant head = HeadVariant::kGlobalOnly;
  double best_f1 = 0;
  double mean_f1 = 0;
};

// Trains and tests the four feature/head variants with identical seeds, in
// the order (w, g), (w, lg), (we, g), (we, lg).
std::vector<AblationRow> CmdAblate(const TrainOptions &options,
                                   std::ostream &out);

struct SplitStats {
  CorpusStats parsed;   // every annotation in the standoff files
  CorpusStats aligned;  // annotations that reached at least one token
};

// Per-split trigger and entity counts from prepared/*.annotations.tsv.
std::map<std::string, SplitStats> CmdStats(const std::string &workdir,
                                           std::ostream &out);

}  // namespace evtrig

#endif  // EVTRIG_CLI_COMMANDS_H_
