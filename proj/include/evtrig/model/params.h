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

#ifndef EVTRIG_MODEL_PARAMS_H_
#define EVTRIG_MODEL_PARAMS_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "evtrig/autodiff/tensor.h"

namespace evtrig {

struct NamedTensor {
  std::string name;
  ad::Tensor tensor;
};

// Ordered collection of named trainable tensors. Registration order is the
// serialization order.
class ParameterStore {
 public:
  // Registers a zero tensor that requires gradients.
  ad::Tensor Add(const std::string &name, ad::Shape shape);
  ad::Tensor Get(std::string_view name) const;
  bool Contains(std::string_view name) const;

  const std::vector<NamedTensor> &entries() const { return entries_; }
  size_t NumValues() const;
  void ZeroGrad();

  // Deep copy of the values with gradients dropped.
  ParameterStore Snapshot() const;
  // Copies values from a store with the same names and shapes.
  void LoadValues(const ParameterStore &other);

 private:
  std::vector<NamedTensor> entries_;
  std::unordered_map<std::string, size_t> index_;
};

}  // namespace evtrig

#endif  // EVTRIG_MODEL_PARAMS_H_
