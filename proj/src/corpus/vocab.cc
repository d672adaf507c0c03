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

#include "evtrig/corpus/vocab.h"

#include <sstream>

#include "evtrig/error.h"
#include "evtrig/util/hash.h"
#include "evtrig/util/strings.h"

namespace evtrig {

int Dictionary::Add(const std::string &item) {
  auto it = index_.find(item);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(items_.size());
  items_.push_back(item);
  index_.emplace(item, id);
  return id;
}

int Dictionary::Find(std::string_view item) const {
  auto it = index_.find(std::string(item));
  return it == index_.end() ? -1 : it->second;
}

bool IsAllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Vocabularies Vocabularies::Build(std::span<const LabeledSentence> sentences) {
  if (sentences.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no sentences to build vocabularies");
  }
  Vocabularies v;
  v.words_.Add(kUnkToken);
  v.word_forms_.push_back(kUnkToken);
  v.words_.Add(kNumToken);
  v.word_forms_.push_back(kNumToken);

  std::set<std::string> entity_types, labels;
  for (const LabeledSentence &s : sentences) {
    for (const LabeledToken &t : s.tokens) {
      std::string lower = AsciiLower(t.surface);
      if (v.words_.Find(lower) < 0) {
        v.words_.Add(lower);
        v.word_forms_.push_back(t.surface);
      }
      if (t.entity != kNoneLabel) entity_types.insert(t.entity);
      if (s.has_gold && t.label != kNoneLabel) labels.insert(t.label);
    }
  }
  v.entities_.Add(kNoneLabel);
  for (const std::string &e : entity_types) v.entities_.Add(e);
  v.labels_.Add(kNoneLabel);
  for (const std::string &l : labels) v.labels_.Add(l);
  v.deferred_.assign(v.labels_.size(), false);
  return v;
}

void Vocabularies::AddEntityType(const std::string &type) {
  entities_.Add(type);
}

void Vocabularies::AddLabel(const std::string &label) {
  labels_.Add(label);
  deferred_.resize(labels_.size(), false);
}

void Vocabularies::SetDeferred(const std::set<std::string> &labels) {
  deferred_.assign(labels_.size(), false);
  for (const std::string &l : labels) {
    int id = labels_.Find(l);
    if (id < 0) throw Error(ErrorCode::kUnknownLabel, "unknown label " + l);
    if (id == kNone) {
      throw Error(ErrorCode::kConfigError, "None cannot be deferred");
    }
    deferred_[id] = true;
  }
}

int Vocabularies::WordId(std::string_view surface) const {
  int id = words_.Find(AsciiLower(surface));
  if (id >= 0) return id;
  return IsAllDigits(surface) ? kNumWord : kUnkWord;
}

int Vocabularies::EntityId(std::string_view type) const {
  int id = entities_.Find(type);
  if (id < 0) {
    throw Error(ErrorCode::kUnknownLabel,
                "unknown entity type " + std::string(type));
  }
  return id;
}

int Vocabularies::LabelId(std::string_view label) const {
  int id = labels_.Find(label);
  if (id < 0) {
    throw Error(ErrorCode::kUnknownLabel,
                "unknown trigger label " + std::string(label));
  }
  return id;
}

std::vector<std::string> Vocabularies::TrainLabels() const {
  std::vector<std::string> out;
  for (size_t i = 1; i < labels_.size(); ++i) {
    if (!deferred_[i]) out.push_back(labels_.at(static_cast<int>(i)));
  }
  return out;
}

std::vector<std::string> Vocabularies::DeferredLabels() const {
  std::vector<std::string> out;
  for (size_t i = 1; i < labels_.size(); ++i) {
    if (deferred_[i]) out.push_back(labels_.at(static_cast<int>(i)));
  }
  return out;
}

// Layout:
//   #evtrig-vocab 1
//   [words] <n>          then  id<TAB>lowercase<TAB>original
//   [entities] <n>       then  id<TAB>type
//   [labels] <n>         then  id<TAB>label<TAB>none|train|deferred
std::string Vocabularies::Serialize() const {
  std::ostringstream out;
  out << "#evtrig-vocab 1\n";
  out << "[words] " << words_.size() << "\n";
  for (size_t i = 0; i < words_.size(); ++i) {
    out << i << '\t' << words_.items()[i] << '\t' << word_forms_[i] << '\n';
  }
  out << "[entities] " << entities_.size() << "\n";
  for (size_t i = 0; i < entities_.size(); ++i) {
    out << i << '\t' << entities_.items()[i] << '\n';
  }
  out << "[labels] " << labels_.size() << "\n";
  for (size_t i = 0; i < labels_.size(); ++i) {
    const char *role = i == 0 ? "none" : (deferred_[i] ? "deferred" : "train");
    out << i << '\t' << labels_.items()[i] << '\t' << role << '\n';
  }
  return out.str();
}

Vocabularies Vocabularies::Parse(std::string_view text) {
  std::vector<std::string> lines = Split(text, '\n');
  if (lines.empty() || lines[0] != "#evtrig-vocab 1") {
    throw Error(ErrorCode::kMalformedLine, "vocabulary: bad header");
  }
  Vocabularies v;
  size_t pos = 1;
  auto section = [&](std::string_view name, size_t fields,
                     auto &&handle) {
    if (pos >= lines.size() || !StartsWith(lines[pos], name)) {
      throw Error(ErrorCode::kMalformedLine,
                  "vocabulary: expected section " + std::string(name));
    }
    long n = ParseLong(Trim(std::string_view(lines[pos]).substr(name.size())),
                       "vocabulary section size");
    ++pos;
    for (long i = 0; i < n; ++i, ++pos) {
      if (pos >= lines.size()) {
        throw Error(ErrorCode::kMalformedLine, "vocabulary: truncated");
      }
      std::vector<std::string> f = Split(lines[pos], '\t');
      if (f.size() != fields || ParseLong(f[0], "vocabulary id") != i) {
        throw Error(ErrorCode::kMalformedLine,
                    "vocabulary: bad entry at line " + std::to_string(pos + 1));
      }
      handle(f);
    }
  };
  section("[words]", 3, [&](const std::vector<std::string> &f) {
    v.words_.Add(f[1]);
    v.word_forms_.push_back(f[2]);
  });
  section("[entities]", 2,
          [&](const std::vector<std::string> &f) { v.entities_.Add(f[1]); });
  section("[labels]", 3, [&](const std::vector<std::string> &f) {
    v.labels_.Add(f[1]);
    v.deferred_.push_back(f[2] == "deferred");
  });
  if (v.words_.size() < 2 || v.entities_.size() < 1 || v.labels_.size() < 1 ||
      v.entities_.at(0) != kNoneLabel || v.labels_.at(0) != kNoneLabel) {
    throw Error(ErrorCode::kMalformedLine, "vocabulary: missing reserved ids");
  }
  return v;
}

std::string Vocabularies::Hash() const { return FingerprintHex(Serialize()); }

TokenSequence Vocabularies::Index(const LabeledSentence &sentence) const {
  TokenSequence seq;
  seq.doc_id = sentence.doc_id;
  seq.sent_idx = sentence.sent_idx;
  seq.has_gold = sentence.has_gold;
  seq.tokens.reserve(sentence.tokens.size());
  for (const LabeledToken &t : sentence.tokens) {
    Token tok;
    tok.surface = t.surface;
    tok.start = t.start;
    tok.end = t.end;
    tok.word_id = WordId(t.surface);
    tok.entity_id = EntityId(t.entity);
    tok.label_id = sentence.has_gold ? LabelId(t.label) : kNone;
    seq.tokens.push_back(std::move(tok));
  }
  return seq;
}

TokenSequence RelabelDeferred(TokenSequence sequence,
                              const Vocabularies &vocabs) {
  for (Token &t : sequence.tokens) {
    if (vocabs.IsDeferred(t.label_id)) t.label_id = Vocabularies::kNone;
  }
  return sequence;
}

RareLabelSplit FilterRareLabels(const std::map<std::string, long> &test_counts,
                                long threshold) {
  RareLabelSplit split;
  for (const auto &[label, count] : test_counts) {
    if (label == kNoneLabel) continue;
    if (count <= threshold) {
      split.deferred.insert(label);
    } else {
      split.train_labels.insert(label);
    }
  }
  return split;
}

}  // namespace evtrig
