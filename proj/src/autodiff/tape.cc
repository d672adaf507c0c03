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

#include "evtrig/autodiff/tape.h"

#include "evtrig/error.h"

namespace evtrig::ad {

void Tape::Record(const Tensor &output, BackwardFn backward) {
  entries_.push_back({output, std::move(backward)});
}

void Tape::Backward(const Tensor &loss) {
  if (!loss.defined() || loss.size() != 1) {
    throw Error(ErrorCode::kNotScalarLoss,
                "backward needs a scalar loss, got " +
                    (loss.defined() ? ShapeString(loss.shape())
                                    : std::string("undefined")));
  }
  bool found = false;
  for (Entry &e : entries_) {
    e.output.ZeroGrad();
    if (e.output.SameStorage(loss)) found = true;
  }
  if (!found) {
    throw Error(ErrorCode::kLossNotOnTape, "loss was not recorded on this tape");
  }
  Tensor seed = loss;
  seed.grad()[0] = 1.0;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    it->backward();
  }
}

}  // namespace evtrig::ad
