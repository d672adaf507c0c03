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


// Acceptance checks. Prints one PASS, FAIL or SKIP line per criterion and
// exits nonzero if any criterion fails.
//
// Criteria 5 and 6 need the MLEE corpus (EVTRIG_MLEE_DIR, holding train/,
// dev/ or devel/, and test/) and, for 6, word2vec vectors (EVTRIG_VECTORS).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "evtrig/cli/commands.h"
#include "evtrig/error.h"
#include "evtrig/eval/metrics.h"
#include "evtrig/eval/ttest.h"
#include "evtrig/model/checkpoint.h"
#include "evtrig/train/trainer.h"
#include "gradient_cases.h"
#include "mlee_reference.h"
#include "test_util.h"

namespace evtrig {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict = Verdict::kPass;
  std::string detail;
};

Outcome Pass(std::string detail) { return {Verdict::kPass, std::move(detail)}; }
Outcome Fail(std::string detail) { return {Verdict::kFail, std::move(detail)}; }
Outcome Skip(std::string detail) { return {Verdict::kSkip, std::move(detail)}; }

std::string Fmt(const char *format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Gradient checks.

constexpr int kGradPoints = 100;
constexpr double kGradTolerance = 1e-4;

// Diagnostic for points over tolerance: the same point re-checked with a
// fourth-order stencil at a larger step, where rounding noise is ~1e-13.
constexpr testing::Differencing kRecheck = {1e-3, ad::Stencil::kFourthOrder};

struct CaseResult {
  std::string name;
  double worst = 0;
  int failures = 0;
  double recheck_worst = 0;  // over the failing points only
};

CaseResult RunCase(const testing::GradientCase &c,
                   const testing::GradientCase &recheck, uint64_t seed) {
  Rng rng(seed);
  CaseResult r{c.name};
  for (int i = 0; i < kGradPoints; ++i) {
    Rng at_point = rng;
    double err = c.check(rng);
    r.worst = std::max(r.worst, err);
    if (!(err <= kGradTolerance)) {
      ++r.failures;
      r.recheck_worst = std::max(r.recheck_worst, recheck.check(at_point));
    }
  }
  return r;
}

Outcome CheckGradients() {
  struct Group {
    const char *name;
    std::vector<testing::GradientCase> pinned, recheck;
  };
  std::vector<Group> groups = {
      {"ops", testing::OpGradientCases(), testing::OpGradientCases(kRecheck)},
      {"cells", testing::CellGradientCases(),
       testing::CellGradientCases(kRecheck)},
      {"sentence loss", testing::ModelGradientCases(),
       testing::ModelGradientCases(kRecheck)},
  };
  std::string detail, failed;
  double recheck_worst = 0;
  uint64_t seed = 1000;
  for (const Group &g : groups) {
    double worst = 0;
    int failures = 0;
    for (size_t i = 0; i < g.pinned.size(); ++i) {
      CaseResult r = RunCase(g.pinned[i], g.recheck[i], seed++);
      worst = std::max(worst, r.worst);
      failures += r.failures;
      recheck_worst = std::max(recheck_worst, r.recheck_worst);
      if (r.failures > 0) {
        failed += "\n    " + r.name + ": " + std::to_string(r.failures) +
                  "/" + std::to_string(kGradPoints) + " points over, worst " +
                  Fmt("%.2e", r.worst) + "; fourth-order recheck worst " +
                  Fmt("%.2e", r.recheck_worst);
      }
    }
    detail += std::string(detail.empty() ? "" : "; ") + g.name + " (" +
              std::to_string(g.pinned.size()) + " cases x " +
              std::to_string(kGradPoints) + ") worst " + Fmt("%.2e", worst) +
              ", " + std::to_string(failures) + " points over";
  }
  if (failed.empty()) return Pass(detail);
  return Fail(detail + "; fourth-order recheck of those points worst " +
              Fmt("%.2e", recheck_worst) + failed);
}

// ---------------------------------------------------------------------------
// 2. Overfitting a separable corpus.

double TokenAccuracy(const TriggerModel &model,
                     std::span<const TokenSequence> data,
                     const Vocabularies &vocabs) {
  std::vector<std::vector<int>> pred = PredictAll(model, data, vocabs);
  long right = 0, total = 0;
  for (size_t s = 0; s < data.size(); ++s) {
    for (size_t k = 0; k < data[s].tokens.size(); ++k) {
      right += pred[s][k] == data[s].tokens[k].label_id;
      ++total;
    }
  }
  return total == 0 ? 0 : static_cast<double>(right) / total;
}

Outcome CheckOverfit() {
  constexpr int kWords = 20, kEntities = 3, kLabels = 4, kMaxEpochs = 200;
  Vocabularies vocabs = testing::SyntheticVocabs(kWords, kEntities, kLabels);
  std::vector<TokenSequence> data =
      testing::SeparableCorpus(50, kWords, kEntities, 7);
  ModelConfig model_config;
  TrainConfig train_config;
  train_config.epochs = kMaxEpochs;
  TriggerModel model = BuildModel(model_config, vocabs, nullptr);
  int reached = 0;
  double accuracy = 0;
  Train(model, data, {}, vocabs, train_config,
        [&](const EpochRecord &record, const TriggerModel &m) {
          accuracy = TokenAccuracy(m, data, vocabs);
          if (accuracy >= 0.99) {
            reached = record.epoch;
            return false;
          }
          return true;
        });
  std::string detail = "token accuracy " + Fmt("%.4f", accuracy);
  if (reached > 0) {
    return Pass(detail + " at epoch " + std::to_string(reached));
  }
  return Fail(detail + " after " + std::to_string(kMaxEpochs) + " epochs");
}

// ---------------------------------------------------------------------------
// 3. Scorer against a brute-force counter.

Outcome CheckScorer() {
  Rng rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    int labels = 2 + static_cast<int>(rng.Uniform() * 8);
    int length = static_cast<int>(rng.Uniform() * 40);
    LabelSpace space;
    for (int l = 0; l < labels; ++l) {
      space.names.push_back("L" + std::to_string(l));
    }
    space.deferred.assign(labels, false);
    for (int l = 1; l < labels; ++l) space.deferred[l] = rng.Uniform() < 0.2;
    std::vector<int> gold, pred;
    for (int k = 0; k < length; ++k) {
      auto draw = [&] {
        return rng.Uniform() < 0.5 ? 0
                                   : static_cast<int>(rng.Uniform() * labels);
      };
      gold.push_back(draw());
      pred.push_back(draw());
    }
    // Label by label, token by token.
    Counts want;
    for (int l = 1; l < labels; ++l) {
      for (int k = 0; k < length; ++k) {
        int p = space.deferred[pred[k]] ? 0 : pred[k];
        if (gold[k] == l && p == l) ++want.tp;
        if (gold[k] != l && p == l) ++want.fp;
        if (gold[k] == l && p != l) ++want.fn;
      }
    }
    EvalReport got = MicroPrf(gold, pred, space);
    if (!(got.micro == want)) {
      return Fail("trial " + std::to_string(trial) + " counts differ");
    }
  }
  return Pass("1000 random pairs, exact counts");
}

// ---------------------------------------------------------------------------
// 4. Deferred gold tokens are forced misses.

Outcome CheckDeferred() {
  constexpr int kWords = 20, kEntities = 3, kLabels = 4;
  Vocabularies vocabs = testing::SyntheticVocabs(kWords, kEntities, kLabels);
  std::vector<TokenSequence> data =
      testing::SeparableCorpus(20, kWords, kEntities, 11);
  ModelConfig model_config;
  model_config.word_dim = 8;
  model_config.entity_dim = 3;
  model_config.rnn_hidden = 8;
  model_config.hidden_dims = {12};
  TrainConfig train_config;
  train_config.epochs = 5;
  TriggerModel model = BuildModel(model_config, vocabs, nullptr);
  Train(model, data, {}, vocabs, train_config);

  // L3 is deferred; the base set has no L3 gold, the second marks four
  // otherwise-None tokens as L3.
  vocabs.SetDeferred({"L3"});
  int deferred = vocabs.LabelId("L3");
  std::vector<TokenSequence> base =
      testing::SeparableCorpus(6, kWords, kEntities, 12);
  for (TokenSequence &s : base) {
    for (Token &t : s.tokens) {
      if (t.label_id == deferred) t.label_id = 0;
    }
  }
  std::vector<TokenSequence> marked = base;
  int placed = 0;
  for (TokenSequence &s : marked) {
    for (Token &t : s.tokens) {
      if (placed < 4 && t.label_id == 0) {
        t.label_id = deferred;
        ++placed;
      }
    }
  }
  if (placed != 4) return Fail("could not place four deferred tokens");
  EvalReport a = EvaluateModel(model, base, vocabs);
  EvalReport b = EvaluateModel(model, marked, vocabs);
  std::string detail = "FN " + std::to_string(a.micro.fn) + " -> " +
                       std::to_string(b.micro.fn) + ", FP " +
                       std::to_string(a.micro.fp) + " -> " +
                       std::to_string(b.micro.fp);
  if (b.micro.fn - a.micro.fn == 4 && b.micro.fp == a.micro.fp &&
      b.micro.tp == a.micro.tp) {
    return Pass(detail);
  }
  return Fail(detail);
}

// ---------------------------------------------------------------------------
// 5 and 6. MLEE.

const char *Env(const char *name) {
  const char *v = std::getenv(name);
  return v != nullptr && *v != '\0' ? v : nullptr;
}

using Reference = std::map<std::string, std::pair<long, long>>;

std::string CompareCounts(const std::map<std::string, long> &got,
                          const Reference &want, bool test_side,
                          const char *what) {
  std::string diff;
  for (const auto &[label, counts] : want) {
    long expected = test_side ? counts.second : counts.first;
    auto it = got.find(label);
    long actual = it == got.end() ? 0 : it->second;
    if (actual != expected) {
      diff += std::string(" ") + what + " " + label + " " +
              std::to_string(actual) + "!=" + std::to_string(expected) + ";";
    }
  }
  return diff;
}

std::map<std::string, long> Merge(std::map<std::string, long> a,
                                  const std::map<std::string, long> &b) {
  for (const auto &[k, v] : b) a[k] += v;
  return a;
}

Outcome CheckCorpusFidelity() {
  const char *mlee = Env("EVTRIG_MLEE_DIR");
  if (mlee == nullptr) return Skip("EVTRIG_MLEE_DIR not set");
  TempDir work;
  std::ostringstream sink;
  PrepareOptions prepare;
  prepare.corpus_dir = mlee;
  prepare.workdir = work.path();
  CmdPrepare(prepare, sink);
  std::map<std::string, SplitStats> stats = CmdStats(work.path(), sink);
  const auto triggers = testing::MleeTriggerCounts();
  const auto entities = testing::MleeEntityCounts();

  std::string test_diff =
      CompareCounts(stats["test"].parsed.triggers, triggers, true, "trigger") +
      CompareCounts(stats["test"].parsed.entities, entities, true, "entity");
  // The published training column may or may not include the dev split.
  std::string train_diff =
      CompareCounts(stats["train"].parsed.triggers, triggers, false,
                    "trigger") +
      CompareCounts(stats["train"].parsed.entities, entities, false, "entity");
  std::string merged_diff =
      CompareCounts(Merge(stats["train"].parsed.triggers,
                          stats["dev"].parsed.triggers),
                    triggers, false, "trigger") +
      CompareCounts(Merge(stats["train"].parsed.entities,
                          stats["dev"].parsed.entities),
                    entities, false, "entity");
  std::string aligned_diff =
      CompareCounts(stats["test"].aligned.triggers, triggers, true, "trigger");
  std::string detail = "parse-level counts";
  const char *train_side = train_diff.empty()    ? "train"
                           : merged_diff.empty() ? "train+dev"
                                                 : nullptr;
  if (test_diff.empty() && train_side != nullptr) {
    detail += std::string(" match (training column = ") + train_side + ")";
    detail += aligned_diff.empty() ? "; aligned test triggers match too"
                                   : "; aligned test triggers differ:" +
                                         aligned_diff;
    return Pass(detail);
  }
  return Fail(detail + " differ. test:" + test_diff + " train:" + train_diff +
              " train+dev:" + merged_diff);
}

Outcome CheckHeadline() {
  const char *mlee = Env("EVTRIG_MLEE_DIR");
  const char *vectors = Env("EVTRIG_VECTORS");
  if (mlee == nullptr || vectors == nullptr) {
    return Skip("EVTRIG_MLEE_DIR and EVTRIG_VECTORS not both set");
  }
  TempDir work;
  std::ostringstream sink;
  PrepareOptions prepare;
  prepare.corpus_dir = mlee;
  prepare.workdir = work.path();
  CmdPrepare(prepare, sink);
  TrainOptions train;
  train.workdir = work.path();
  train.vectors_path = vectors;
  MultiRunSummary s = CmdTrain(train, sink);
  double best = 100 * s.runs[s.best].test.micro_prf.f1;
  std::string detail = "best-of-" + std::to_string(s.runs.size()) +
                       " GRU test micro-F1 " + Fmt("%.2f", best) +
                       " (mean " + Fmt("%.2f", 100 * s.mean_f1) +
                       ", band [76.00, 82.00])";
  return best >= 76.0 && best <= 82.0 ? Pass(detail) : Fail(detail);
}

// ---------------------------------------------------------------------------
// 7. Determinism of the whole pipeline.

std::map<std::string, std::string> Artifacts(const std::string &workdir) {
  std::map<std::string, std::string> out;
  for (const char *dir : {kPreparedDir, kCheckpointDir, kLogDir, kReportDir}) {
    fs::path root = fs::path(workdir) / dir;
    if (!fs::exists(root)) continue;
    for (const auto &e : fs::recursive_directory_iterator(root)) {
      if (e.is_regular_file()) {
        out[fs::relative(e.path(), workdir).generic_string()] =
            ReadFile(e.path().string());
      }
    }
  }
  return out;
}

RunConfig SmallRun() {
  RunConfig config;
  config.model.word_dim = 16;
  config.model.entity_dim = 4;
  config.model.rnn_hidden = 12;
  config.model.hidden_dims = {16, 8};
  config.train.epochs = 4;
  config.train.runs = 2;
  config.train.learning_rate = 0.05;
  return config;
}

std::map<std::string, std::string> RunPipeline(const std::string &corpus) {
  TempDir work;
  std::ostringstream sink;
  PrepareOptions prepare;
  prepare.corpus_dir = corpus;
  prepare.workdir = work.path();
  prepare.rare_threshold = 2;
  CmdPrepare(prepare, sink);
  TrainOptions train;
  train.workdir = work.path();
  train.config = SmallRun();
  CmdTrain(train, sink);
  EvalOptions eval;
  eval.checkpoint = work.Sub("checkpoints/best.ckpt");
  eval.dataset = work.Sub("prepared/test.tsv");
  eval.out_dir = work.Sub("reports/test");
  eval.workdir = work.path();
  CmdEval(eval, sink);
  return Artifacts(work.path());
}

Outcome CheckDeterminism() {
  TempDir corpus;
  testing::WriteToyCorpus(corpus.path(), 21, 6);
  std::map<std::string, std::string> first = RunPipeline(corpus.path());
  std::map<std::string, std::string> second = RunPipeline(corpus.path());
  if (first.size() != second.size()) return Fail("different file sets");
  for (const auto &[name, bytes] : first) {
    auto it = second.find(name);
    if (it == second.end() || it->second != bytes) {
      return Fail(name + " differs between runs");
    }
  }
  return Pass(std::to_string(first.size()) +
              " prepared files, checkpoints, logs and reports bit-identical");
}

// ---------------------------------------------------------------------------
// 8. Checkpoint round trip.

Outcome CheckCheckpoint() {
  TempDir corpus, work;
  testing::WriteToyCorpus(corpus.path(), 22, 6);
  std::ostringstream sink;
  PrepareOptions prepare;
  prepare.corpus_dir = corpus.path();
  prepare.workdir = work.path();
  prepare.rare_threshold = 2;
  CmdPrepare(prepare, sink);
  PreparedData data = LoadPrepared(work.path());
  RunConfig config = SmallRun();
  TriggerModel model = BuildModel(config.model, data.vocabs, nullptr);
  Train(model, data.train, data.dev, data.vocabs, config.train);
  std::string path = work.Sub("model.ckpt");
  SaveCheckpoint(path, model, data.vocabs);
  LoadedCheckpoint loaded = LoadCheckpoint(path);
  std::vector<std::vector<int>> before =
      PredictAll(model, data.dev, data.vocabs);
  std::vector<std::vector<int>> after =
      PredictAll(loaded.model, data.dev, loaded.vocabs);
  long tokens = 0;
  for (const auto &s : before) tokens += static_cast<long>(s.size());
  if (before != after) return Fail("dev predictions changed");
  // Scores must agree bit for bit too, not only the argmax.
  for (size_t s = 0; s < data.dev.size(); ++s) {
    ad::Tape a(false), b(false);
    Rng ra(0), rb(0);
    if (model.Forward(a, data.dev[s], false, ra).probs !=
        loaded.model.Forward(b, data.dev[s], false, rb).probs) {
      return Fail("dev probabilities changed in sentence " + std::to_string(s));
    }
  }
  return Pass(std::to_string(data.dev.size()) + " dev sentences, " +
              std::to_string(tokens) +
              " tokens: predictions and probabilities identical");
}

// ---------------------------------------------------------------------------
// 9. Welch's t-test.

Outcome CheckTTest() {
  // Textbook example (Welch's t-test article, example 1); reference values
  // from scipy.stats.ttest_ind(a, b, equal_var=False, alternative="greater").
  const std::vector<double> a = {27.5, 21.0, 19.0, 23.6, 17.0, 17.9, 16.9, 20.1,
                                 21.9, 22.6, 23.1, 19.6, 19.0, 21.7, 21.4};
  const std::vector<double> b = {27.1, 22.0, 20.8, 23.4, 23.4, 23.5, 25.8, 22.0,
                                 24.8, 20.2, 21.9, 22.1, 22.9, 20.5, 24.4};
  constexpr double kP = 0.9893109992685665;
  TTestResult r = WelchOneSided(a, b);
  if (std::round(r.p_value * 1e4) != std::round(kP * 1e4)) {
    return Fail("p " + Fmt("%.6f", r.p_value) + " vs " + Fmt("%.6f", kP));
  }
  Rng rng(9);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> x, y;
    int nx = 2 + static_cast<int>(rng.Uniform() * 8);
    int ny = 2 + static_cast<int>(rng.Uniform() * 8);
    for (int i = 0; i < nx; ++i) x.push_back(rng.Uniform(70, 85));
    for (int i = 0; i < ny; ++i) y.push_back(rng.Uniform(70, 85));
    double sum = WelchOneSided(x, y).p_value + WelchOneSided(y, x).p_value;
    worst = std::max(worst, std::fabs(sum - 1));
  }
  std::string detail = "worked example p " + Fmt("%.4f", r.p_value) +
                       "; max |p(a,b) + p(b,a) - 1| " + Fmt("%.1e", worst);
  return worst <= 1e-9 ? Pass(detail) : Fail(detail);
}

int Main() {
  struct Criterion {
    const char *id;
    const char *title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "gradient checks", CheckGradients},
      {"AC2", "overfit separable corpus", CheckOverfit},
      {"AC3", "scorer vs brute force", CheckScorer},
      {"AC4", "deferred labels are forced misses", CheckDeferred},
      {"AC5", "corpus statistics", CheckCorpusFidelity},
      {"AC6", "headline F1", CheckHeadline},
      {"AC7", "determinism", CheckDeterminism},
      {"AC8", "checkpoint round trip", CheckCheckpoint},
      {"AC9", "Welch t-test", CheckTTest},
  };
  int failures = 0;
  for (const Criterion &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = Fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    const char *word = o.verdict == Verdict::kPass   ? "PASS"
                       : o.verdict == Verdict::kFail ? "FAIL"
                                                     : "SKIP";
    failures += o.verdict == Verdict::kFail;
    std::printf("%s %s %s: %s (%.1fs)\n", c.id, word, c.title,
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace evtrig

int main() { return evtrig::Main(); }
