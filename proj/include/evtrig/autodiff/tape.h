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

#ifndef EVTRIG_AUTODIFF_TAPE_H_
#define EVTRIG_AUTODIFF_TAPE_H_

#include <functional>
#include <vector>

#include "evtrig/autodiff/tensor.h"

namespace evtrig::ad {

// Define-by-run record of differentiable operations. Ops append an entry
// only when their output requires a gradient, so evaluation with frozen
// parameters leaves the tape empty.
class Tape {
 public:
  using BackwardFn = std::function<void()>;

  Tape() = default;
  // A tape built with recording = false produces outputs that never require
  // gradients, whatever their inputs.
  explicit Tape(bool recording) : recording_(recording) {}

  bool recording() const { return recording_; }

  void Record(const Tensor &output, BackwardFn backward);

  // Zeroes the gradients of every recorded output, seeds d(loss)/d(loss) = 1
  // and replays the backward rules in reverse order. Leaf tensors (those not
  // produced on this tape) accumulate, so two calls add twice the gradient.
  void Backward(const Tensor &loss);

  size_t size() const { return entries_.size(); }
  void Clear() { entries_.clear(); }

 private:
  struct Entry {
    Tensor output;
    BackwardFn backward;
  };
  std::vector<Entry> entries_;
  bool recording_ = true;
};

}  // namespace evtrig::ad

#endif  // EVTRIG_AUTODIFF_TAPE_H_
