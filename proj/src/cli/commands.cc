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

#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "evtrig/cli/manifest.h"
#include "evtrig/corpus/alignment.h"
#include "evtrig/corpus/standoff.h"
#include "evtrig/error.h"
#include "evtrig/eval/categories.h"
#include "evtrig/eval/report.h"
#include "evtrig/model/checkpoint.h"
#include "evtrig/train/word2vec.h"
#include "evtrig/util/hash.h"
#include "evtrig/util/strings.h"

namespace evtrig {

namespace fs = std::filesystem;

namespace {

std::string Join(const fs::path &a, const std::string &b) {
  return (a / b).string();
}

std::string PreparedPath(const std::string &workdir, const std::string &name) {
  return Join(fs::path(workdir) / kPreparedDir, name);
}

std::string DatasetName(const std::string &split) { return split + ".tsv"; }

std::string AnnotationsName(const std::string &split) {
  return split + ".annotations.tsv";
}

void MakeDirs(const fs::path &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create " + dir.string() + ": " + ec.message());
  }
}

void RequireFiles(const std::vector<std::string> &paths) {
  std::vector<std::string> missing;
  for (const std::string &p : paths) {
    if (!fs::is_regular_file(p)) missing.push_back(p);
  }
  if (missing.empty()) return;
  std::string msg = "missing prepared files:";
  for (const std::string &m : missing) msg += " " + m;
  throw Error(ErrorCode::kIoError, msg);
}

void StampVersion(RunManifest *manifest) {
  manifest->Set("toolkit.version", std::string("evtrig ") + EVTRIG_VERSION);
  manifest->Set("layout.prepared", kPreparedDir);
  manifest->Set("layout.checkpoints", kCheckpointDir);
  manifest->Set("layout.reports", kReportDir);
  manifest->Set("layout.logs", kLogDir);
}

// Path of `path` relative to `workdir`, or empty if it lies outside.
std::string RelativeTo(const std::string &workdir, const fs::path &path) {
  if (workdir.empty()) return "";
  fs::path rel = fs::weakly_canonical(path).lexically_relative(
      fs::weakly_canonical(workdir));
  if (rel.empty() || *rel.begin() == "..") return "";
  return rel.generic_string();
}

std::vector<TokenSequence> IndexAll(const std::vector<LabeledSentence> &s,
                                    const Vocabularies &vocabs) {
  std::vector<TokenSequence> out;
  out.reserve(s.size());
  for (const LabeledSentence &sentence : s) {
    out.push_back(vocabs.Index(sentence));
  }
  return out;
}

std::string F1Cell(double f1) { return Percent(f1); }

}  // namespace

std::string CorpusSplitDir(const std::string &corpus_dir,
                           const std::string &split) {
  std::vector<std::string> names = {split};
  if (split == "dev") names.push_back("devel");
  for (const std::string &name : names) {
    fs::path dir = fs::path(corpus_dir) / name;
    if (fs::is_directory(dir)) return dir.string();
  }
  throw Error(ErrorCode::kIoError,
              "corpus " + corpus_dir + ": missing " + split + " directory");
}

void CmdPrepare(const PrepareOptions &options, std::ostream &out) {
  if (options.rare_threshold < 0) {
    throw Error(ErrorCode::kConfigError, "rare threshold must be >= 0");
  }
  std::map<std::string, std::string> dirs;
  for (const char *split : kSplits) {
    dirs[split] = CorpusSplitDir(options.corpus_dir, split);
  }

  std::map<std::string, std::vector<LabeledSentence>> sentences;
  std::map<std::string, std::vector<AnnotationRecord>> records;
  std::map<std::string, size_t> documents;
  for (const char *split : kSplits) {
    const std::string &dir = dirs[split];
    std::vector<std::string> ids = ListDocuments(dir);
    documents[split] = ids.size();
    for (const std::string &id : ids) {
      AlignedDocument aligned = PrepareDocument(LoadStandoffDocument(dir, id));
      auto &s = sentences[split];
      s.insert(s.end(), aligned.sentences.begin(), aligned.sentences.end());
      auto &r = records[split];
      r.insert(r.end(), aligned.annotations.begin(), aligned.annotations.end());
    }
  }

  std::vector<LabeledSentence> vocab_source = sentences["train"];
  vocab_source.insert(vocab_source.end(), sentences["dev"].begin(),
                      sentences["dev"].end());
  Vocabularies vocabs = Vocabularies::Build(vocab_source);
  // Types that only occur in the test split still need ids for scoring.
  std::set<std::string> entity_types, labels;
  for (const auto &[split, recs] : records) {
    for (const AnnotationRecord &r : recs) {
      (r.kind == AnnotationKind::kEntity ? entity_types : labels)
          .insert(r.label);
    }
  }
  for (const std::string &t : entity_types) vocabs.AddEntityType(t);
  for (const std::string &l : labels) vocabs.AddLabel(l);

  CorpusStats test_counts = CountAnnotations(records["test"], false);
  RareLabelSplit rare =
      FilterRareLabels(test_counts.triggers, options.rare_threshold);
  vocabs.SetDeferred(rare.deferred);

  fs::path prepared = fs::path(options.workdir) / kPreparedDir;
  MakeDirs(prepared);
  RunManifest manifest;
  StampVersion(&manifest);
  manifest.Set("prepare.corpus_dir", options.corpus_dir);
  manifest.Set("prepare.rare_threshold", std::to_string(options.rare_threshold));
  for (const char *split : kSplits) {
    std::string dataset = FormatPreparedDataset(sentences[split]);
    std::string annotations = FormatAnnotationRecords(records[split]);
    WriteFile(Join(prepared, DatasetName(split)), dataset);
    WriteFile(Join(prepared, AnnotationsName(split)), annotations);
    size_t tokens = 0;
    for (const LabeledSentence &s : sentences[split]) tokens += s.tokens.size();
    std::string prefix = std::string("prepare.") + split;
    manifest.Set(prefix + ".documents", std::to_string(documents[split]));
    manifest.Set(prefix + ".sentences",
                 std::to_string(sentences[split].size()));
    manifest.Set(prefix + ".tokens", std::to_string(tokens));
    manifest.RecordArtifact(options.workdir,
                            std::string(kPreparedDir) + "/" + DatasetName(split));
    manifest.RecordArtifact(
        options.workdir, std::string(kPreparedDir) + "/" + AnnotationsName(split));
    out << split << ": " << documents[split] << " documents, "
        << sentences[split].size() << " sentences, " << tokens << " tokens\n";
  }

  std::string deferred;
  for (const std::string &l : rare.deferred) deferred += l + "\n";
  WriteFile(Join(prepared, kVocabFile), vocabs.Serialize());
  WriteFile(Join(prepared, kDeferredFile), deferred);
  manifest.RecordArtifact(options.workdir,
                          std::string(kPreparedDir) + "/" + kVocabFile);
  manifest.RecordArtifact(options.workdir,
                          std::string(kPreparedDir) + "/" + kDeferredFile);
  manifest.Set("prepare.vocab_hash", vocabs.Hash());
  manifest.Save(options.workdir);

  out << "vocabulary: " << vocabs.words().size() << " words, "
      << vocabs.entities().size() << " entity types, "
      << vocabs.labels().size() << " labels\n";
  out << "deferred labels (test count <= " << options.rare_threshold
      << "):";
  for (const std::string &l : rare.deferred) out << ' ' << l;
  out << '\n';
}

PreparedData LoadPrepared(const std::string &workdir) {
  std::vector<std::string> files = {PreparedPath(workdir, kVocabFile)};
  for (const char *split : kSplits) {
    files.push_back(PreparedPath(workdir, DatasetName(split)));
  }
  RequireFiles(files);
  PreparedData data;
  data.vocabs = Vocabularies::Parse(ReadFile(files[0]));
  auto load = [&](const char *split) {
    return IndexAll(
        ParsePreparedDataset(ReadFile(PreparedPath(workdir, DatasetName(split)))),
        data.vocabs);
  };
  data.train = load("train");
  data.dev = load("dev");
  data.test = load("test");
  return data;
}

namespace {

struct TrainSetup {
  PreparedData data;
  PretrainedVectors vectors;
  bool has_vectors = false;
};

// Validates everything that can be checked before any training compute.
TrainSetup SetUpTraining(const TrainOptions &options) {
  options.config.Validate();
  TrainSetup setup;
  setup.data = LoadPrepared(options.workdir);
  if (!options.vectors_path.empty()) {
    setup.vectors = LoadWord2Vec(options.vectors_path);
    setup.has_vectors = true;
    if (setup.vectors.dimension() != options.config.model.word_dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vector dimension " +
                      std::to_string(setup.vectors.dimension()) +
                      " differs from word_dim " +
                      std::to_string(options.config.model.word_dim));
    }
  }
  if (setup.data.train.empty()) {
    throw Error(ErrorCode::kEmptyTrainSet, "prepared train split is empty");
  }
  return setup;
}

void RecordInputs(const TrainOptions &options, const std::string &prefix,
                  RunManifest *manifest) {
  manifest->ClearPrefix(prefix);
  for (const auto &[key, value] : options.config.ToKeyValues()) {
    manifest->Set(prefix + "config." + key, value);
  }
  if (options.vectors_path.empty()) {
    manifest->Set(prefix + "vectors", "none");
  } else {
    manifest->Set(prefix + "vectors", options.vectors_path);
    manifest->Set(prefix + "vectors_hash",
                  FingerprintHex(ReadFile(options.vectors_path)));
  }
}

}  // namespace

MultiRunSummary CmdTrain(const TrainOptions &options, std::ostream &out) {
  TrainSetup setup = SetUpTraining(options);
  const RunConfig &config = options.config;
  const PretrainedVectors *vectors =
      setup.has_vectors ? &setup.vectors : nullptr;

  MultiRunSummary summary =
      MultiRun(config.model, config.train, setup.data.vocabs, setup.data.train,
               setup.data.dev, setup.data.test, vectors);

  const std::string &workdir = options.workdir;
  MakeDirs(fs::path(workdir) / kCheckpointDir);
  MakeDirs(fs::path(workdir) / kLogDir);
  MakeDirs(fs::path(workdir) / kReportDir);

  RunManifest manifest = RunManifest::Load(workdir);
  StampVersion(&manifest);
  RecordInputs(options, "train.", &manifest);
  manifest.ClearPrefix(std::string("artifact.") + kCheckpointDir + "/");
  manifest.ClearPrefix(std::string("artifact.") + kLogDir + "/");

  std::ostringstream report;
  report << "run\tseed\tbest_epoch\tdev_f1\ttest_precision\ttest_recall\t"
            "test_f1\n";
  std::string seeds;
  for (size_t i = 0; i < summary.runs.size(); ++i) {
    const RunOutcome &run = summary.runs[i];
    std::string name = "run" + std::to_string(i + 1);
    ModelConfig model_config = config.model;
    model_config.seed = run.seed;
    TriggerModel model = BuildModel(model_config, setup.data.vocabs, nullptr);
    model.params().LoadValues(run.train.best);
    std::string ckpt = std::string(kCheckpointDir) + "/" + name + ".ckpt";
    std::string log = std::string(kLogDir) + "/" + name + ".tsv";
    SaveCheckpoint(Join(workdir, ckpt), model, setup.data.vocabs);
    WriteFile(Join(workdir, log), FormatTrainLog(run.train.log));
    manifest.RecordArtifact(workdir, ckpt);
    manifest.RecordArtifact(workdir, log);
    if (i == summary.best) {
      std::string best = std::string(kCheckpointDir) + "/best.ckpt";
      SaveCheckpoint(Join(workdir, best), model, setup.data.vocabs);
      manifest.RecordArtifact(workdir, best);
    }
    const Prf &t = run.test.micro_prf;
    report << (i + 1) << '\t' << run.seed << '\t' << run.train.best_epoch
           << '\t' << Percent(run.train.best_dev_f1) << '\t'
           << Percent(t.precision) << '\t' << Percent(t.recall) << '\t'
           << Percent(t.f1) << '\n';
    seeds += (seeds.empty() ? "" : ",") + std::to_string(run.seed);
  }
  report << "best_run\t" << (summary.best + 1) << '\n';
  report << "best_test_f1\t"
         << Percent(summary.runs[summary.best].test.micro_prf.f1) << '\n';
  report << "mean_test_f1\t" << Percent(summary.mean_f1) << '\n';
  report << "stddev_test_f1\t" << Percent(summary.stddev_f1) << '\n';

  std::string config_rel = std::string(kLogDir) + "/config.txt";
  std::string summary_rel = std::string(kReportDir) + "/train_summary.txt";
  WriteFile(Join(workdir, config_rel), config.Format());
  WriteFile(Join(workdir, summary_rel), report.str());
  manifest.RecordArtifact(workdir, config_rel);
  manifest.RecordArtifact(workdir, summary_rel);
  manifest.Set("train.seeds", seeds);
  manifest.Set("train.best_run", std::to_string(summary.best + 1));
  manifest.Save(workdir);

  out << report.str();
  return summary;
}

void CmdEval(const EvalOptions &options, std::ostream &out) {
  LoadedCheckpoint loaded = LoadCheckpoint(options.checkpoint);
  fs::path dataset_dir = fs::path(options.dataset).parent_path();
  std::string vocab_path = Join(dataset_dir, kVocabFile);
  RequireFiles({options.dataset, vocab_path});
  Vocabularies dataset_vocabs = Vocabularies::Parse(ReadFile(vocab_path));
  if (dataset_vocabs.Hash() != loaded.vocabs.Hash()) {
    throw Error(ErrorCode::kVocabularyMismatch,
                "checkpoint vocabulary " + loaded.vocabs.Hash() +
                    " differs from dataset vocabulary " +
                    dataset_vocabs.Hash());
  }
  const Vocabularies &vocabs = loaded.vocabs;
  std::vector<LabeledSentence> sentences =
      ParsePreparedDataset(ReadFile(options.dataset));
  std::vector<TokenSequence> sequences = IndexAll(sentences, vocabs);
  std::vector<std::vector<int>> predictions =
      PredictAll(loaded.model, sequences, vocabs);

  std::vector<std::vector<std::string>> named;
  for (const auto &p : predictions) {
    std::vector<std::string> row;
    for (int id : p) row.push_back(vocabs.labels().at(id));
    named.push_back(std::move(row));
  }
  MakeDirs(options.out_dir);
  std::vector<std::string> written = {"predictions.tsv"};
  WriteFile(Join(options.out_dir, "predictions.tsv"),
            FormatPredictions(sentences, named));

  bool has_gold = !sentences.empty();
  for (const LabeledSentence &s : sentences) has_gold &= s.has_gold;
  if (has_gold) {
    EvalReport report = ScorePredictions(sequences, predictions, vocabs);
    CategoryMap categories =
        options.categories_path.empty()
            ? CategoryMap::MleeTriggers()
            : CategoryMap::Parse(ReadFile(options.categories_path));
    try {
      CategoryRollup(&report, categories);
      std::ostringstream rollup;
      rollup << "category\ttp\tfp\tfn\tprecision\trecall\tf1\n";
      for (const CategoryScore &c : report.categories) {
        rollup << c.name << '\t' << c.counts.tp << '\t' << c.counts.fp << '\t'
               << c.counts.fn << '\t' << Percent(c.prf.precision) << '\t'
               << Percent(c.prf.recall) << '\t' << Percent(c.prf.f1) << '\n';
      }
      WriteFile(Join(options.out_dir, "categories.tsv"), rollup.str());
      written.push_back("categories.tsv");
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kUnmappedLabel) throw;
      out << "category rollup skipped: " << e.what() << '\n';
    }
    std::string rendered = RenderReport(report);
    WriteFile(Join(options.out_dir, "report.txt"), rendered);
    WriteFile(Join(options.out_dir, "report.record"),
              FormatReportRecord(report));
    WriteFile(Join(options.out_dir, "confusion.tsv"),
              FormatConfusionTsv(report));
    written.insert(written.end(),
                   {"report.txt", "report.record", "confusion.tsv"});
    out << rendered;
  } else {
    out << "dataset has no gold labels; wrote predictions only\n";
  }

  std::string rel_out = RelativeTo(options.workdir, options.out_dir);
  if (!rel_out.empty()) {
    RunManifest manifest = RunManifest::Load(options.workdir);
    StampVersion(&manifest);
    std::string prefix = "eval." + rel_out + ".";
    manifest.ClearPrefix(prefix);
    manifest.ClearPrefix("artifact." + rel_out + "/");
    manifest.Set(prefix + "checkpoint", options.checkpoint);
    manifest.Set(prefix + "checkpoint_hash",
                 FingerprintHex(ReadFile(options.checkpoint)));
    manifest.Set(prefix + "dataset", options.dataset);
    manifest.Set(prefix + "dataset_hash",
                 FingerprintHex(ReadFile(options.dataset)));
    for (const std::string &f : written) {
      manifest.RecordArtifact(options.workdir, rel_out + "/" + f);
    }
    manifest.Save(options.workdir);
  }
}

void CmdPredict(const std::string &checkpoint, const std::string &dataset,
                const std::string &output) {
  LoadedCheckpoint loaded = LoadCheckpoint(checkpoint);
  std::vector<LabeledSentence> sentences =
      ParsePreparedDataset(ReadFile(dataset));
  // Gold columns are not needed; unknown labels must not stop prediction.
  for (LabeledSentence &s : sentences) {
    for (LabeledToken &t : s.tokens) {
      if (loaded.vocabs.entities().Find(t.entity) < 0) t.entity = kNoneLabel;
    }
    s.has_gold = false;
  }
  std::vector<TokenSequence> sequences = IndexAll(sentences, loaded.vocabs);
  std::vector<std::vector<int>> predictions =
      PredictAll(loaded.model, sequences, loaded.vocabs);
  std::vector<std::vector<std::string>> named;
  for (const auto &p : predictions) {
    std::vector<std::string> row;
    for (int id : p) row.push_back(loaded.vocabs.labels().at(id));
    named.push_back(std::move(row));
  }
  WriteFile(output, FormatPredictions(sentences, named));
}

std::vector<AblationRow> CmdAblate(const TrainOptions &options,
                                   std::ostream &out) {
  TrainSetup setup = SetUpTraining(options);
  const PretrainedVectors *vectors =
      setup.has_vectors ? &setup.vectors : nullptr;
  const std::pair<FeatureVariant, HeadVariant> variants[] = {
      {FeatureVariant::kWordOnly, HeadVariant::kGlobalOnly},
      {FeatureVariant::kWordOnly, HeadVariant::kLocalPlusGlobal},
      {FeatureVariant::kWordPlusEntity, HeadVariant::kGlobalOnly},
      {FeatureVariant::kWordPlusEntity, HeadVariant::kLocalPlusGlobal},
  };
  std::vector<AblationRow> rows;
  for (const auto &[features, head] : variants) {
    ModelConfig model = options.config.model;
    model.features = features;
    model.head = head;
    MultiRunSummary summary =
        MultiRun(model, options.config.train, setup.data.vocabs,
                 setup.data.train, setup.data.dev, setup.data.test, vectors);
    AblationRow row;
    row.index = static_cast<int>(rows.size()) + 1;
    row.features = features;
    row.head = head;
    row.best_f1 = summary.runs[summary.best].test.micro_prf.f1;
    row.mean_f1 = summary.mean_f1;
    rows.push_back(row);
  }

  std::ostringstream table;
  table << "index\tfeatures\thead\tbest_f1\tmean_f1\n";
  for (const AblationRow &r : rows) {
    table << r.index << '\t' << FeatureVariantName(r.features) << '\t'
          << HeadVariantName(r.head) << '\t' << F1Cell(r.best_f1) << '\t'
          << F1Cell(r.mean_f1) << '\n';
  }
  MakeDirs(fs::path(options.workdir) / kReportDir);
  std::string rel = std::string(kReportDir) + "/ablation.tsv";
  WriteFile(Join(options.workdir, rel), table.str());
  RunManifest manifest = RunManifest::Load(options.workdir);
  StampVersion(&manifest);
  RecordInputs(options, "ablate.", &manifest);
  manifest.RecordArtifact(options.workdir, rel);
  manifest.Save(options.workdir);
  out << table.str();
  return rows;
}

namespace {

void PrintCountTable(std::ostream &out, const std::string &title,
                     const std::map<std::string, SplitStats> &stats,
                     bool triggers, const CategoryMap &names) {
  auto pick = [&](const CorpusStats &c) -> const std::map<std::string, long> & {
    return triggers ? c.triggers : c.entities;
  };
  std::set<std::string> keys;
  for (const auto &[split, s] : stats) {
    for (const auto &[k, v] : pick(s.parsed)) keys.insert(k);
  }
  out << title << '\n';
  char line[256];
  std::snprintf(line, sizeof(line), "%-36s %8s %8s %8s   %8s %8s %8s\n",
                "type", "train", "dev", "test", "train*", "dev*", "test*");
  out << line;
  auto count = [&](const std::string &split, bool aligned,
                   const std::string &key) {
    const SplitStats &s = stats.at(split);
    const auto &m = pick(aligned ? s.aligned : s.parsed);
    auto it = m.find(key);
    return it == m.end() ? 0L : it->second;
  };
  std::map<std::string, long> totals;
  for (const std::string &key : keys) {
    std::string name = key;
    if (const CategoryEntry *e = names.Find(key)) {
      name = e->display + (e->abbreviation.empty()
                               ? ""
                               : " (" + e->abbreviation + ")");
    }
    long v[6];
    int i = 0;
    for (bool aligned : {false, true}) {
      for (const char *split : kSplits) {
        v[i] = count(split, aligned, key);
        totals[std::to_string(i)] += v[i];
        ++i;
      }
    }
    std::snprintf(line, sizeof(line),
                  "%-36s %8ld %8ld %8ld   %8ld %8ld %8ld\n", name.c_str(),
                  v[0], v[1], v[2], v[3], v[4], v[5]);
    out << line;
  }
  std::snprintf(line, sizeof(line), "%-36s %8ld %8ld %8ld   %8ld %8ld %8ld\n",
                "Total", totals["0"], totals["1"], totals["2"], totals["3"],
                totals["4"], totals["5"]);
  out << line;
}

}  // namespace

std::map<std::string, SplitStats> CmdStats(const std::string &workdir,
                                           std::ostream &out) {
  std::vector<std::string> files;
  for (const char *split : kSplits) {
    files.push_back(PreparedPath(workdir, AnnotationsName(split)));
  }
  RequireFiles(files);
  std::map<std::string, SplitStats> stats;
  for (size_t i = 0; i < files.size(); ++i) {
    std::vector<AnnotationRecord> records =
        ParseAnnotationRecords(ReadFile(files[i]));
    SplitStats &s = stats[kSplits[i]];
    s.parsed = CountAnnotations(records, false);
    s.aligned = CountAnnotations(records, true);
  }
  PrintCountTable(out, "Event triggers (* = aligned to at least one token)",
                  stats, true, CategoryMap::MleeTriggers());
  out << '\n';
  PrintCountTable(out, "Entities (* = aligned to at least one token)", stats,
                  false, CategoryMap::MleeEntities());
  return stats;
}

}  // namespace evtrig
