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

#include "evtrig/train/word2vec.h"

#include <algorithm>
#include <charconv>
#include <cstring>

#include "evtrig/error.h"
#include "evtrig/util/strings.h"

namespace evtrig {

void PretrainedVectors::Add(const std::string &word,
                            std::vector<double> vector) {
  if (static_cast<int>(vector.size()) != dimension_) {
    throw Error(ErrorCode::kMalformedEntry,
                "vector for '" + word + "' has " +
                    std::to_string(vector.size()) + " values, expected " +
                    std::to_string(dimension_));
  }
  if (exact_.count(word)) return;
  size_t id = words_.size();
  words_.push_back(word);
  values_.insert(values_.end(), vector.begin(), vector.end());
  exact_.emplace(word, id);
  folded_.emplace(AsciiLower(word), id);  // keeps the first in file order
}

std::span<const double> PretrainedVectors::vector(size_t i) const {
  return std::span<const double>(values_).subspan(i * dimension_, dimension_);
}

long PretrainedVectors::Find(std::string_view word) const {
  auto it = exact_.find(std::string(word));
  return it == exact_.end() ? -1 : static_cast<long>(it->second);
}

long PretrainedVectors::FindCaseInsensitive(std::string_view word) const {
  auto it = folded_.find(AsciiLower(word));
  return it == folded_.end() ? -1 : static_cast<long>(it->second);
}

namespace {

std::vector<std::string> Fields(std::string_view line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<double> ParseValues(const std::vector<std::string> &fields,
                                const std::string &where) {
  std::vector<double> v;
  v.reserve(fields.size() - 1);
  for (size_t i = 1; i < fields.size(); ++i) {
    try {
      v.push_back(ParseDouble(fields[i], where));
    } catch (const Error &) {
      throw Error(ErrorCode::kMalformedEntry,
                  where + ": bad value '" + fields[i] + "'");
    }
  }
  return v;
}

bool FirstEntryIsText(std::string_view body, int dim) {
  size_t eol = body.find('\n');
  std::vector<std::string> f = Fields(body.substr(0, eol));
  if (static_cast<int>(f.size()) != dim + 1) return false;
  for (size_t i = 1; i < f.size(); ++i) {
    double v;
    auto [p, ec] = std::from_chars(f[i].data(), f[i].data() + f[i].size(), v);
    if (ec != std::errc() || p != f[i].data() + f[i].size()) return false;
  }
  return true;
}

}  // namespace

PretrainedVectors ParseWord2Vec(std::string_view contents,
                                VectorFormat format) {
  size_t eol = contents.find('\n');
  if (eol == std::string_view::npos) {
    throw Error(ErrorCode::kMalformedEntry, "vectors: missing header line");
  }
  std::vector<std::string> header = Fields(contents.substr(0, eol));
  if (header.size() != 2) {
    throw Error(ErrorCode::kMalformedEntry, "vectors: header must be 'count dim'");
  }
  long count = 0, dim = 0;
  try {
    count = ParseLong(header[0], "vectors header");
    dim = ParseLong(header[1], "vectors header");
  } catch (const Error &) {
    throw Error(ErrorCode::kMalformedEntry, "vectors: bad header numbers");
  }
  if (count < 0 || dim <= 0) {
    throw Error(ErrorCode::kMalformedEntry, "vectors: bad header numbers");
  }
  std::string_view body = contents.substr(eol + 1);
  if (format == VectorFormat::kAuto) {
    format = count == 0 || FirstEntryIsText(body, static_cast<int>(dim))
                 ? VectorFormat::kText
                 : VectorFormat::kBinary;
  }

  PretrainedVectors vectors(static_cast<int>(dim));
  if (format == VectorFormat::kText) {
    std::vector<std::string> lines = Split(body, '\n');
    long seen = 0;
    for (size_t n = 0; n < lines.size(); ++n) {
      std::vector<std::string> f = Fields(lines[n]);
      if (f.empty()) continue;
      std::string where = "vectors line " + std::to_string(n + 2);
      if (static_cast<long>(f.size()) != dim + 1) {
        throw Error(ErrorCode::kMalformedEntry,
                    where + ": expected " + std::to_string(dim) +
                        " values, found " + std::to_string(f.size() - 1));
      }
      vectors.Add(f[0], ParseValues(f, where));
      ++seen;
    }
    if (seen != count) {
      throw Error(ErrorCode::kMalformedEntry,
                  "vectors: header announces " + std::to_string(count) +
                      " entries, file has " + std::to_string(seen));
    }
    return vectors;
  }

  size_t pos = 0;
  for (long e = 0; e < count; ++e) {
    while (pos < body.size() && (body[pos] == '\n' || body[pos] == '\r')) {
      ++pos;
    }
    size_t sp = body.find(' ', pos);
    if (sp == std::string_view::npos || sp == pos) {
      throw Error(ErrorCode::kMalformedEntry,
                  "vectors: binary entry " + std::to_string(e) + " truncated");
    }
    std::string word(body.substr(pos, sp - pos));
    pos = sp + 1;
    if (body.size() - pos < static_cast<size_t>(dim) * 4) {
      throw Error(ErrorCode::kMalformedEntry,
                  "vectors: binary entry '" + word + "' truncated");
    }
    std::vector<double> v(dim);
    for (long i = 0; i < dim; ++i) {
      float f;
      std::memcpy(&f, body.data() + pos + 4 * i, 4);
      v[i] = f;
    }
    pos += 4 * dim;
    vectors.Add(word, std::move(v));
  }
  return vectors;
}

PretrainedVectors LoadWord2Vec(const std::string &path, VectorFormat format) {
  return ParseWord2Vec(ReadFile(path), format);
}

size_t InitWordEmbeddings(TriggerModel &model, const Vocabularies &vocabs,
                          const PretrainedVectors &vectors) {
  const int dim = model.config().word_dim;
  if (vectors.dimension() != dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "pretrained vectors have dimension " +
                    std::to_string(vectors.dimension()) + ", model expects " +
                    std::to_string(dim));
  }
  ad::Tensor table = model.tables().words;
  size_t covered = 0;
  for (size_t id = 0; id < vocabs.words().size(); ++id) {
    const std::string &form = vocabs.WordForm(static_cast<int>(id));
    long hit = vectors.Find(form);
    if (hit < 0) hit = vectors.Find(vocabs.words().at(static_cast<int>(id)));
    if (hit < 0) hit = vectors.FindCaseInsensitive(form);
    if (hit < 0) continue;
    std::span<const double> src = vectors.vector(static_cast<size_t>(hit));
    std::copy(src.begin(), src.end(), table.values().begin() + id * dim);
    ++covered;
  }
  return covered;
}

}  // namespace evtrig
