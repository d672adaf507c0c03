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

#ifndef EVTRIG_CORPUS_VOCAB_H_
#define EVTRIG_CORPUS_VOCAB_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "evtrig/corpus/alignment.h"

namespace evtrig {

// Dense string <-> index bijection. Ids are assigned in insertion order.
class Dictionary {
 public:
  int Add(const std::string &item);
  int Find(std::string_view item) const;  // -1 when absent
  const std::string &at(int id) const { return items_.at(id); }
  size_t size() const { return items_.size(); }
  const std::vector<std::string> &items() const { return items_; }

  bool operator==(const Dictionary &o) const { return items_ == o.items_; }

 private:
  std::vector<std::string> items_;
  std::unordered_map<std::string, int> index_;
};

struct Token {
  std::string surface;
  size_t start = 0;
  size_t end = 0;
  int word_id = 0;
  int entity_id = 0;
  int label_id = 0;

  bool operator==(const Token &) const = default;
};

struct TokenSequence {
  std::string doc_id;
  int sent_idx = 0;
  std::vector<Token> tokens;
  bool has_gold = true;

  bool operator==(const TokenSequence &) const = default;
};

// Word, entity-type and trigger-label dictionaries. Words are lowercased
// before indexing; index 0 is the unknown word and index 1 the shared token
// for out-of-vocabulary numbers. Entity and label dictionaries hold None at
// index 0 followed by the observed types in sorted order.
class Vocabularies {
 public:
  static constexpr int kUnkWord = 0;
  static constexpr int kNumWord = 1;
  static constexpr int kNone = 0;
  static constexpr char kUnkToken[] = "<unk>";
  static constexpr char kNumToken[] = "<num>";

  // Throws EmptyCorpus when `sentences` is empty.
  static Vocabularies Build(std::span<const LabeledSentence> sentences);

  // Appends types that the building portion did not contain.
  void AddEntityType(const std::string &type);
  void AddLabel(const std::string &label);

  // Marks labels excluded from training; unknown names are an error.
  void SetDeferred(const std::set<std::string> &labels);

  int WordId(std::string_view surface) const;
  int EntityId(std::string_view type) const;  // UnknownLabel if absent
  int LabelId(std::string_view label) const;  // UnknownLabel if absent

  const Dictionary &words() const { return words_; }
  const Dictionary &entities() const { return entities_; }
  const Dictionary &labels() const { return labels_; }

  // First-seen original-case surface of a word entry, used to match
  // pretrained vectors with exact-case priority.
  const std::string &WordForm(int id) const { return word_forms_.at(id); }

  bool IsDeferred(int label_id) const { return deferred_.at(label_id); }
  const std::vector<bool> &deferred_mask() const { return deferred_; }
  std::vector<std::string> TrainLabels() const;
  std::vector<std::string> DeferredLabels() const;

  std::string Serialize() const;
  static Vocabularies Parse(std::string_view text);
  std::string Hash() const;

  TokenSequence Index(const LabeledSentence &sentence) const;

  bool operator==(const Vocabularies &) const = default;

 private:
  Dictionary words_;
  std::vector<std::string> word_forms_;
  Dictionary entities_;
  Dictionary labels_;
  std::vector<bool> deferred_;
};

bool IsAllDigits(std::string_view s);

// Gold tokens of deferred labels become None (training targets only).
TokenSequence RelabelDeferred(TokenSequence sequence,
                              const Vocabularies &vocabs);

struct RareLabelSplit {
  std::set<std::string> train_labels;
  std::set<std::string> deferred;
};

// Labels whose test count is <= threshold are deferred.
RareLabelSplit FilterRareLabels(const std::map<std::string, long> &test_counts,
                                long threshold);

}  // namespace evtrig

#endif  // EVTRIG_CORPUS_VOCAB_H_
