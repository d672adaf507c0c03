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

#ifndef EVTRIG_TRAIN_WORD2VEC_H_
#define EVTRIG_TRAIN_WORD2VEC_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "evtrig/corpus/vocab.h"
#include "evtrig/model/trigger_model.h"

namespace evtrig {

class PretrainedVectors {
 public:
  PretrainedVectors() = default;
  explicit PretrainedVectors(int dimension) : dimension_(dimension) {}

  // Later duplicates of a word are ignored. Throws MalformedEntry when the
  // vector length differs from the dimension.
  void Add(const std::string &word, std::vector<double> vector);

  int dimension() const { return dimension_; }
  size_t size() const { return words_.size(); }
  const std::string &word(size_t i) const { return words_[i]; }
  std::span<const double> vector(size_t i) const;

  // Exact match, or -1.
  long Find(std::string_view word) const;
  // First entry (in file order) whose ASCII-lowercased form matches.
  long FindCaseInsensitive(std::string_view word) const;

 private:
  int dimension_ = 0;
  std::vector<std::string> words_;
  std::vector<double> values_;
  std::unordered_map<std::string, size_t> exact_;
  std::unordered_map<std::string, size_t> folded_;
};

enum class VectorFormat { kAuto, kText, kBinary };

// word2vec files: a "count dim" header, then either one
// "word v1 ... v_dim" line per entry (text) or "word " followed by dim
// little-endian float32 values (binary). Auto-detection tries the text
// layout on the first entry and falls back to binary.
PretrainedVectors ParseWord2Vec(std::string_view contents,
                                VectorFormat format = VectorFormat::kAuto);
PretrainedVectors LoadWord2Vec(const std::string &path,
                               VectorFormat format = VectorFormat::kAuto);

// Copies pretrained rows into the word table. Matching prefers the word's
// original-case form, then its lowercased form, then any case-insensitive
// match. Returns the number of vocabulary rows covered. Throws
// DimensionMismatch when the vector size differs from the word dimension.
size_t InitWordEmbeddings(TriggerModel &model, const Vocabularies &vocabs,
                          const PretrainedVectors &vectors);

}  // namespace evtrig

#endif  // EVTRIG_TRAIN_WORD2VEC_H_
