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

#ifndef EVTRIG_AUTODIFF_GRAD_CHECK_H_
#define EVTRIG_AUTODIFF_GRAD_CHECK_H_

#include <functional>
#include <span>

#include "evtrig/autodiff/tape.h"
#include "evtrig/autodiff/tensor.h"

namespace evtrig::ad {

// Builds a scalar on the given tape from tensors captured by the caller.
using ScalarFn = std::function<Tensor(Tape &)>;

// Denominator floor of the relative error.
inline constexpr double kGradCheckFloor = 1e-8;

enum class Stencil {
  kCentral,      // (f(x + h) - f(x - h)) / 2h
  kFourthOrder,  // (f(x - 2h) - 8 f(x - h) + 8 f(x + h) - f(x + 2h)) / 12h
};

// Max over coordinates of
//   |analytic - numeric| / max(|analytic|, |numeric|, kGradCheckFloor)
// where numeric is the stencil's difference quotient along e_i with step
// `eps`. Every tensor in `inputs` must require gradients; their gradients
// are overwritten.
double GradCheck(const ScalarFn &f, std::span<Tensor> inputs, double eps,
                 Stencil stencil = Stencil::kCentral);
double GradCheck(const ScalarFn &f, Tensor x, double eps,
                 Stencil stencil = Stencil::kCentral);

}  // namespace evtrig::ad

#endif  // EVTRIG_AUTODIFF_GRAD_CHECK_H_
