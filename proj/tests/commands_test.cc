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


#include "evtrig/cli/commands.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "evtrig/cli/manifest.h"
#include "evtrig/corpus/dataset.h"
#include "evtrig/error.h"
#include "evtrig/eval/report.h"
#include "evtrig/train/trainer.h"
#include "evtrig/model/checkpoint.h"
#include "evtrig/util/hash.h"
#include "evtrig/util/strings.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace evtrig {
namespace {

namespace fs = std::filesystem;

ErrorCode CodeOf(const std::function<void()> &f,
                 std::string *message = nullptr) {
  try {
    f();
  } catch (const Error &e) {
    if (message != nullptr) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kIoError;
}

// Every regular file under `dir`, keyed by relative path.
std::map<std::string, std::string> Snapshot(const std::string &dir) {
  std::map<std::string, std::string> out;
  for (const auto &e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) {
      out[fs::relative(e.path(), dir).generic_string()] =
          ReadFile(e.path().string());
    }
  }
  return out;
}

RunConfig TinyRun() {
  RunConfig c;
  c.model.word_dim = 6;
  c.model.entity_dim = 3;
  c.model.rnn_hidden = 5;
  c.model.hidden_dims = {8};
  c.train.epochs = 2;
  c.train.runs = 1;
  c.train.learning_rate = 0.1;
  return c;
}

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    counts_ = testing::WriteToyCorpus(corpus_.path(), 5, 6);
    Prepare(work_.path());
  }

  void Prepare(const std::string &workdir) {
    PrepareOptions opts;
    opts.corpus_dir = corpus_.path();
    opts.workdir = workdir;
    opts.rare_threshold = 2;
    std::ostringstream out;
    CmdPrepare(opts, out);
  }

  TrainOptions Train(int runs = 1) {
    TrainOptions opts;
    opts.workdir = work_.path();
    opts.config = TinyRun();
    opts.config.train.runs = runs;
    return opts;
  }

  testing::TempDir corpus_;
  testing::TempDir work_;
  testing::ToyCorpusCounts counts_;
};

TEST_F(CommandsTest, PrepareWritesLayout) {
  for (const char *split : kSplits) {
    EXPECT_TRUE(
        fs::exists(work_.Sub(std::string("prepared/") + split + ".tsv")));
    EXPECT_TRUE(fs::exists(
        work_.Sub(std::string("prepared/") + split + ".annotations.tsv")));
  }
  EXPECT_TRUE(fs::exists(work_.Sub("prepared/vocab.tsv")));
  EXPECT_TRUE(fs::exists(work_.Sub("prepared/deferred.txt")));
  RunManifest m = RunManifest::Load(work_.path());
  ASSERT_NE(m.Find("toolkit.version"), nullptr);
  ASSERT_NE(m.Find("prepare.vocab_hash"), nullptr);
  EXPECT_NE(m.Find("artifact.prepared/train.tsv"), nullptr);
}

TEST_F(CommandsTest, PrepareIsByteIdenticalOnRerun) {
  std::map<std::string, std::string> first = Snapshot(work_.path());
  Prepare(work_.path());
  EXPECT_EQ(Snapshot(work_.path()), first);
}

TEST_F(CommandsTest, DeferredLabelsFollowTestCounts) {
  std::vector<std::string> want;
  for (const auto &[label, n] : counts_.triggers["train"]) {
    if (counts_.triggers["test"][label] <= 2) want.push_back(label);
  }
  std::vector<std::string> got;
  for (const std::string &line :
       Split(ReadFile(work_.Sub("prepared/deferred.txt")), '\n')) {
    if (!line.empty()) got.push_back(line);
  }
  EXPECT_EQ(got, want);
  PreparedData data = LoadPrepared(work_.path());
  EXPECT_EQ(data.vocabs.DeferredLabels(), want);
}

TEST_F(CommandsTest, StatsMatchGeneratedCounts) {
  std::ostringstream out;
  std::map<std::string, SplitStats> stats = CmdStats(work_.path(), out);
  for (const char *split : kSplits) {
    EXPECT_EQ(stats[split].parsed.triggers, counts_.triggers[split]) << split;
    EXPECT_EQ(stats[split].parsed.entities, counts_.entities[split]) << split;
    // Every toy annotation is a whole token.
    EXPECT_EQ(stats[split].aligned.triggers, counts_.triggers[split]);
  }
  EXPECT_NE(out.str().find("Growth"), std::string::npos);
  EXPECT_NE(out.str().find("Gene or Gene Product"), std::string::npos);
}

TEST_F(CommandsTest, MissingA2NamesTheDocument) {
  fs::remove(corpus_.Sub("dev/dev-1.a2"));
  testing::TempDir other;
  std::string msg;
  CodeOf([&] { Prepare(other.path()); }, &msg);
  EXPECT_NE(msg.find("dev-1"), std::string::npos) << msg;
}

TEST_F(CommandsTest, DevDirectoryMayBeNamedDevel) {
  fs::rename(corpus_.Sub("dev"), corpus_.Sub("devel"));
  EXPECT_EQ(CorpusSplitDir(corpus_.path(), "dev"), corpus_.Sub("devel"));
  fs::remove_all(corpus_.Sub("devel"));
  EXPECT_EQ(CodeOf([&] { CorpusSplitDir(corpus_.path(), "dev"); }),
            ErrorCode::kIoError);
}

TEST(CommandsStandaloneTest, StatsOnEmptyDirectoryNamesMissingFiles) {
  testing::TempDir empty;
  std::ostringstream out;
  std::string msg;
  EXPECT_EQ(CodeOf([&] { CmdStats(empty.path(), out); }, &msg),
            ErrorCode::kIoError);
  EXPECT_NE(msg.find("missing prepared files"), std::string::npos);
  EXPECT_NE(msg.find("train.annotations.tsv"), std::string::npos);
}

TEST_F(CommandsTest, TrainWritesEveryArtifactAndRecordsIt) {
  std::ostringstream out;
  MultiRunSummary s = CmdTrain(Train(2), out);
  ASSERT_EQ(s.runs.size(), 2u);
  for (const char *f : {"checkpoints/run1.ckpt", "checkpoints/run2.ckpt",
                        "checkpoints/best.ckpt", "logs/run1.tsv",
                        "logs/run2.tsv", "logs/config.txt",
                        "reports/train_summary.txt"}) {
    EXPECT_TRUE(fs::exists(work_.Sub(f))) << f;
  }
  EXPECT_EQ(ReadFile(work_.Sub("checkpoints/best.ckpt")),
            ReadFile(work_.Sub("checkpoints/run" +
                               std::to_string(s.best + 1) + ".ckpt")));
  RunManifest m = RunManifest::Load(work_.path());
  // Everything on disk is reachable from the manifest with a matching hash.
  for (const auto &[rel, contents] : Snapshot(work_.path())) {
    if (rel == RunManifest::kFileName) continue;
    const std::string *hash = m.Find("artifact." + rel);
    ASSERT_NE(hash, nullptr) << rel;
    EXPECT_EQ(*hash, FingerprintHex(contents)) << rel;
  }
  EXPECT_EQ(*m.Find("train.seeds"), "1,2");
  EXPECT_EQ(*m.Find("train.config.epochs"), "2");
  EXPECT_NE(out.str().find("best"), std::string::npos);
}

TEST_F(CommandsTest, TrainIsReproducible) {
  std::ostringstream out;
  CmdTrain(Train(), out);
  std::map<std::string, std::string> first = Snapshot(work_.path());
  CmdTrain(Train(), out);
  EXPECT_EQ(Snapshot(work_.path()), first);
}

TEST_F(CommandsTest, VectorDimensionCheckedBeforeTraining) {
  WriteFile(work_.Sub("vectors.txt"), "1 3\ncells 1 2 3\n");
  TrainOptions opts = Train();
  opts.vectors_path = work_.Sub("vectors.txt");
  std::ostringstream out;
  EXPECT_EQ(CodeOf([&] { CmdTrain(opts, out); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_FALSE(fs::exists(work_.Sub("checkpoints")));
}

TEST_F(CommandsTest, InvalidConfigRejectedBeforeTraining) {
  TrainOptions opts = Train();
  opts.config.model.dropout = 1.5;
  std::ostringstream out;
  EXPECT_EQ(CodeOf([&] { CmdTrain(opts, out); }), ErrorCode::kConfigError);
  EXPECT_FALSE(fs::exists(work_.Sub("checkpoints")));
}

TEST_F(CommandsTest, PretrainedVectorsSeedTheWordTable) {
  WriteFile(work_.Sub("vectors.txt"),
            "1 6\ngrowth 0.5 0.5 0.5 0.5 0.5 0.5\n");
  TrainOptions opts = Train();
  opts.vectors_path = work_.Sub("vectors.txt");
  opts.config.model.fine_tune_words = false;
  std::ostringstream out;
  CmdTrain(opts, out);
  LoadedCheckpoint ck = LoadCheckpoint(work_.Sub("checkpoints/best.ckpt"));
  int id = ck.vocabs.WordId("growth");
  std::span<const double> row =
      ck.model.tables().words.values().subspan(static_cast<size_t>(id) * 6, 6);
  for (double v : row) EXPECT_EQ(v, 0.5);
  EXPECT_NE(RunManifest::Load(work_.path()).Find("train.vectors_hash"),
            nullptr);
}

TEST_F(CommandsTest, EvalWritesReportsWithCategoryRows) {
  std::ostringstream out;
  CmdTrain(Train(), out);
  EvalOptions opts;
  opts.checkpoint = work_.Sub("checkpoints/best.ckpt");
  opts.dataset = work_.Sub("prepared/test.tsv");
  opts.out_dir = work_.Sub("reports/test");
  opts.workdir = work_.path();
  CmdEval(opts, out);
  for (const char *f : {"predictions.tsv", "report.txt", "report.record",
                        "confusion.tsv", "categories.tsv"}) {
    EXPECT_TRUE(fs::exists(work_.Sub(std::string("reports/test/") + f))) << f;
  }
  std::vector<std::string> rows;
  for (const std::string &line :
       Split(ReadFile(work_.Sub("reports/test/categories.tsv")), '\n')) {
    if (!line.empty()) rows.push_back(line.substr(0, line.find('\t')));
  }
  EXPECT_EQ(rows, (std::vector<std::string>{"category", "Anatomical",
                                            "Molecular", "General", "Planned",
                                            "Overall"}));
  RunManifest m = RunManifest::Load(work_.path());
  EXPECT_NE(m.Find("artifact.reports/test/report.record"), nullptr);

  // The record agrees with scoring the checkpoint directly.
  LoadedCheckpoint ck = LoadCheckpoint(opts.checkpoint);
  PreparedData data = LoadPrepared(work_.path());
  EvalReport direct = EvaluateModel(ck.model, data.test, ck.vocabs);
  EvalReport record =
      ParseReportRecord(ReadFile(work_.Sub("reports/test/report.record")));
  EXPECT_EQ(record.micro, direct.micro);
  EXPECT_EQ(record.micro_prf, direct.micro_prf);
}

TEST_F(CommandsTest, EvalRefusesForeignVocabulary) {
  std::ostringstream out;
  CmdTrain(Train(), out);
  testing::TempDir other_corpus, other_work;
  testing::WriteToyCorpus(other_corpus.path(), 99, 3);
  WriteFile(other_corpus.Sub("train/extra.txt"), "The zebrafish fins.\n");
  WriteFile(other_corpus.Sub("train/extra.a1"), "");
  WriteFile(other_corpus.Sub("train/extra.a2"), "");
  PrepareOptions p;
  p.corpus_dir = other_corpus.path();
  p.workdir = other_work.path();
  CmdPrepare(p, out);
  EvalOptions opts;
  opts.checkpoint = work_.Sub("checkpoints/best.ckpt");
  opts.dataset = other_work.Sub("prepared/test.tsv");
  opts.out_dir = other_work.Sub("eval");
  EXPECT_EQ(CodeOf([&] { CmdEval(opts, out); }),
            ErrorCode::kVocabularyMismatch);
  EXPECT_FALSE(fs::exists(other_work.Sub("eval")));
}

TEST_F(CommandsTest, GoldFreeDatasetGetsPredictionsOnly) {
  std::ostringstream out;
  CmdTrain(Train(), out);
  std::vector<LabeledSentence> sentences =
      ParsePreparedDataset(ReadFile(work_.Sub("prepared/test.tsv")));
  for (LabeledSentence &s : sentences) s.has_gold = false;
  WriteFile(work_.Sub("prepared/raw.tsv"), FormatPreparedDataset(sentences));
  EvalOptions opts;
  opts.checkpoint = work_.Sub("checkpoints/best.ckpt");
  opts.dataset = work_.Sub("prepared/raw.tsv");
  opts.out_dir = work_.Sub("raw_out");
  std::ostringstream eval_out;
  CmdEval(opts, eval_out);
  EXPECT_TRUE(fs::exists(work_.Sub("raw_out/predictions.tsv")));
  EXPECT_FALSE(fs::exists(work_.Sub("raw_out/report.txt")));
  EXPECT_FALSE(fs::exists(work_.Sub("raw_out/report.record")));
  EXPECT_NE(eval_out.str().find("no gold labels"), std::string::npos);

  // predict gives the same ninth column.
  CmdPredict(opts.checkpoint, opts.dataset, work_.Sub("raw_out/p2.tsv"));
  EXPECT_EQ(ReadFile(work_.Sub("raw_out/p2.tsv")),
            ReadFile(work_.Sub("raw_out/predictions.tsv")));
}

TEST_F(CommandsTest, AblateProducesFourRowsInOrder) {
  std::ostringstream out;
  std::vector<AblationRow> rows = CmdAblate(Train(), out);
  ASSERT_EQ(rows.size(), 4u);
  const std::pair<FeatureVariant, HeadVariant> order[] = {
      {FeatureVariant::kWordOnly, HeadVariant::kGlobalOnly},
      {FeatureVariant::kWordOnly, HeadVariant::kLocalPlusGlobal},
      {FeatureVariant::kWordPlusEntity, HeadVariant::kGlobalOnly},
      {FeatureVariant::kWordPlusEntity, HeadVariant::kLocalPlusGlobal}};
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rows[i].index, static_cast<int>(i) + 1);
    EXPECT_EQ(rows[i].features, order[i].first);
    EXPECT_EQ(rows[i].head, order[i].second);
  }
  std::vector<std::string> lines;
  for (const std::string &l :
       Split(ReadFile(work_.Sub("reports/ablation.tsv")), '\n')) {
    if (!l.empty()) lines.push_back(l);
  }
  EXPECT_EQ(lines.size(), 5u);
  EXPECT_NE(
      RunManifest::Load(work_.path()).Find("artifact.reports/ablation.tsv"),
      nullptr);
}

struct Process {
  int status = 0;
  std::string output;
};

Process RunCli(const std::string &args) {
  std::string cmd = std::string(EVTRIG_CLI_PATH) + " " + args + " 2>&1";
  Process p;
  FILE *pipe = popen(cmd.c_str(), "r");
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) p.output.append(buf, n);
  int raw = pclose(pipe);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

TEST(CliTest, ErrorsAreOneMachineReadableLine) {
  testing::TempDir empty;
  Process p = RunCli("stats --workdir " + empty.path());
  EXPECT_NE(p.status, 0);
  EXPECT_EQ(p.output.rfind("error: IoError: missing prepared files", 0), 0u)
      << p.output;
  EXPECT_EQ(std::count(p.output.begin(), p.output.end(), '\n'), 1);

  Process missing = RunCli("train");
  EXPECT_EQ(missing.status, 2);
  EXPECT_EQ(missing.output.rfind("error: ConfigError: ", 0), 0u)
      << missing.output;
  EXPECT_EQ(std::count(missing.output.begin(), missing.output.end(), '\n'), 1);

  Process bad = RunCli("train --workdir " + empty.path() + " --cell rnn");
  EXPECT_NE(bad.status, 0);
  EXPECT_EQ(bad.output.rfind("error: ConfigError: ", 0), 0u) << bad.output;
}

TEST(CliTest, FlagsOverrideConfigFile) {
  testing::TempDir corpus, work;
  testing::WriteToyCorpus(corpus.path(), 8, 3);
  ASSERT_EQ(RunCli("prepare --corpus " + corpus.path() + " --workdir " +
                   work.path())
                .status,
            0);
  WriteFile(work.Sub("run.conf"),
            "word_dim = 4\nentity_dim = 2\nrnn_hidden = 3\nhidden_dims = 4\n"
            "epochs = 5\nruns = 1\nlearning_rate = 0.2\n");
  Process p = RunCli("train --workdir " + work.path() + " --config " +
                     work.Sub("run.conf") + " --epochs 1 --cell lstm");
  ASSERT_EQ(p.status, 0) << p.output;
  std::string effective = ReadFile(work.Sub("logs/config.txt"));
  EXPECT_NE(effective.find("epochs = 1\n"), std::string::npos);
  EXPECT_NE(effective.find("cell = lstm\n"), std::string::npos);
  EXPECT_NE(effective.find("learning_rate = 0.2\n"), std::string::npos);
  EXPECT_NE(effective.find("word_dim = 4\n"), std::string::npos);
  RunManifest m = RunManifest::Load(work.path());
  EXPECT_EQ(*m.Find("train.config.epochs"), "1");
}

TEST(CliTest, PrepareUsesCorpusRootFromEnvironment) {
  testing::TempDir corpus, work;
  testing::WriteToyCorpus(corpus.path(), 9, 2);
  Process p = RunCli("prepare --workdir " + work.path());
  EXPECT_NE(p.status, 0);
  std::string cmd = std::string(kCorpusRootEnv) + "=" + corpus.path() + " " +
                    EVTRIG_CLI_PATH + " prepare --workdir " + work.path() +
                    " > /dev/null 2>&1";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(work.Sub("prepared/train.tsv")));
}

}  // namespace
}  // namespace evtrig
