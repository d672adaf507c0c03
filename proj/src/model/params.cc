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

#include "evtrig/model/params.h"

#include <algorithm>

#include "evtrig/error.h"

namespace evtrig {

ad::Tensor ParameterStore::Add(const std::string &name, ad::Shape shape) {
  if (index_.count(name)) {
    throw Error(ErrorCode::kConfigError, "duplicate parameter " + name);
  }
  ad::Tensor t = ad::Tensor::Zeros(std::move(shape), true);
  index_.emplace(name, entries_.size());
  entries_.push_back({name, t});
  return t;
}

ad::Tensor ParameterStore::Get(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw Error(ErrorCode::kBadCheckpoint,
                "no parameter named " + std::string(name));
  }
  return entries_[it->second].tensor;
}

bool ParameterStore::Contains(std::string_view name) const {
  return index_.count(std::string(name)) > 0;
}

size_t ParameterStore::NumValues() const {
  size_t n = 0;
  for (const NamedTensor &e : entries_) n += e.tensor.size();
  return n;
}

void ParameterStore::ZeroGrad() {
  for (NamedTensor &e : entries_) e.tensor.ZeroGrad();
}

ParameterStore ParameterStore::Snapshot() const {
  ParameterStore copy;
  for (const NamedTensor &e : entries_) {
    ad::Tensor t = e.tensor.Clone();
    t.set_requires_grad(false);
    copy.index_.emplace(e.name, copy.entries_.size());
    copy.entries_.push_back({e.name, t});
  }
  return copy;
}

void ParameterStore::LoadValues(const ParameterStore &other) {
  if (other.entries_.size() != entries_.size()) {
    throw Error(ErrorCode::kBadCheckpoint, "parameter count differs");
  }
  for (NamedTensor &e : entries_) {
    ad::Tensor src = other.Get(e.name);
    if (src.shape() != e.tensor.shape()) {
      throw Error(ErrorCode::kBadCheckpoint,
                  "shape mismatch for " + e.name + ": " +
                      ad::ShapeString(src.shape()) + " vs " +
                      ad::ShapeString(e.tensor.shape()));
    }
    std::copy(src.values().begin(), src.values().end(),
              e.tensor.values().begin());
  }
}

}  // namespace evtrig
