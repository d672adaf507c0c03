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

#include "evtrig/model/checkpoint.h"

#include <bit>
#include <cstring>
#include <optional>

#include "evtrig/error.h"
#include "evtrig/util/strings.h"

namespace evtrig {

static_assert(std::endian::native == std::endian::little,
              "checkpoint I/O assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'E', 'V', 'T', 'R', 'I', 'G', 'C', 'K'};
constexpr uint64_t kVersion = 1;

void PutU64(std::string *out, uint64_t v) {
  char buf[8];
  std::memcpy(buf, &v, 8);
  out->append(buf, 8);
}

void PutBytes(std::string *out, std::string_view s) {
  PutU64(out, s.size());
  out->append(s);
}

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  uint64_t U64() {
    Need(8);
    uint64_t v;
    std::memcpy(&v, data_.data() + pos_, 8);
    pos_ += 8;
    return v;
  }

  std::string_view Bytes() {
    uint64_t n = U64();
    Need(n);
    std::string_view s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  void Doubles(std::span<double> out) {
    Need(out.size() * 8);
    std::memcpy(out.data(), data_.data() + pos_, out.size() * 8);
    pos_ += out.size() * 8;
  }

  bool AtEnd() const { return pos_ == data_.size(); }

 private:
  void Need(uint64_t n) const {
    if (n > data_.size() - pos_) {
      throw Error(ErrorCode::kBadCheckpoint, "checkpoint truncated");
    }
  }

  std::string_view data_;
  size_t pos_ = 0;
};

}  // namespace

std::string SerializeCheckpoint(const TriggerModel &model,
                                const Vocabularies &vocabs) {
  std::string out(kMagic, 8);
  PutU64(&out, kVersion);
  std::string config;
  for (const auto &[k, v] : model.config().ToKeyValues()) {
    config += k + " = " + v + "\n";
  }
  PutBytes(&out, config);
  PutBytes(&out, vocabs.Serialize());
  const auto &entries = model.params().entries();
  PutU64(&out, entries.size());
  for (const NamedTensor &e : entries) {
    PutBytes(&out, e.name);
    PutU64(&out, e.tensor.rank());
    for (size_t d : e.tensor.shape()) PutU64(&out, d);
    std::span<const double> v = e.tensor.values();
    out.append(reinterpret_cast<const char *>(v.data()), v.size() * 8);
  }
  return out;
}

LoadedCheckpoint ParseCheckpoint(std::string_view bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 8) != 0) {
    throw Error(ErrorCode::kBadCheckpoint, "not an evtrig checkpoint");
  }
  Reader r(bytes.substr(8));
  uint64_t version = r.U64();
  if (version != kVersion) {
    throw Error(ErrorCode::kBadCheckpoint,
                "unsupported checkpoint version " + std::to_string(version));
  }
  ModelConfig config;
  std::optional<Vocabularies> parsed_vocabs;
  std::optional<TriggerModel> built;
  try {
    for (const std::string &line : Split(r.Bytes(), '\n')) {
      if (Trim(line).empty()) continue;
      size_t eq = line.find('=');
      if (eq == std::string::npos ||
          !config.Set(Trim(std::string_view(line).substr(0, eq)),
                      Trim(std::string_view(line).substr(eq + 1)))) {
        throw Error(ErrorCode::kBadCheckpoint, "bad config line: " + line);
      }
    }
    parsed_vocabs = Vocabularies::Parse(r.Bytes());
    built.emplace(config, parsed_vocabs->words().size(),
                  parsed_vocabs->entities().size(),
                  parsed_vocabs->labels().size());
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kBadCheckpoint) throw;
    throw Error(ErrorCode::kBadCheckpoint,
                std::string("corrupt checkpoint header: ") + e.what());
  }
  Vocabularies vocabs = std::move(*parsed_vocabs);
  TriggerModel model = std::move(*built);

  uint64_t count = r.U64();
  if (count != model.params().entries().size()) {
    throw Error(ErrorCode::kBadCheckpoint,
                "checkpoint has " + std::to_string(count) +
                    " tensors, model expects " +
                    std::to_string(model.params().entries().size()));
  }
  for (const NamedTensor &e : model.params().entries()) {
    std::string_view name = r.Bytes();
    if (name != e.name) {
      throw Error(ErrorCode::kBadCheckpoint,
                  "expected tensor " + e.name + ", found " + std::string(name));
    }
    uint64_t rank = r.U64();
    ad::Shape shape;
    for (uint64_t i = 0; i < rank; ++i) shape.push_back(r.U64());
    if (shape != e.tensor.shape()) {
      throw Error(ErrorCode::kBadCheckpoint,
                  "shape mismatch for " + e.name + ": " +
                      ad::ShapeString(shape));
    }
    ad::Tensor t = e.tensor;
    r.Doubles(t.values());
  }
  if (!r.AtEnd()) {
    throw Error(ErrorCode::kBadCheckpoint, "trailing bytes in checkpoint");
  }
  return {std::move(vocabs), std::move(model)};
}

void SaveCheckpoint(const std::string &path, const TriggerModel &model,
                    const Vocabularies &vocabs) {
  WriteFile(path, SerializeCheckpoint(model, vocabs));
}

LoadedCheckpoint LoadCheckpoint(const std::string &path) {
  return ParseCheckpoint(ReadFile(path));
}

}  // namespace evtrig
