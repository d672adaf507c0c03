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

#include "evtrig/autodiff/grad_check.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace evtrig::ad {

namespace {

double Evaluate(const ScalarFn &f) {
  Tape tape;
  return f(tape).item();
}

// f evaluated with v[i] moved by `offset`; v[i] is restored afterwards.
double Shifted(const ScalarFn &f, std::span<double> v, size_t i,
               double offset) {
  const double saved = v[i];
  v[i] = saved + offset;
  double y = Evaluate(f);
  v[i] = saved;
  return y;
}

}  // namespace

double GradCheck(const ScalarFn &f, std::span<Tensor> inputs, double eps,
                 Stencil stencil) {
  for (Tensor &x : inputs) x.ZeroGrad();
  {
    Tape tape;
    Tensor loss = f(tape);
    tape.Backward(loss);
  }
  double worst = 0;
  for (Tensor &x : inputs) {
    std::vector<double> analytic(x.grad().begin(), x.grad().end());
    std::span<double> v = x.values();
    for (size_t i = 0; i < v.size(); ++i) {
      double numeric;
      if (stencil == Stencil::kCentral) {
        numeric = (Shifted(f, v, i, eps) - Shifted(f, v, i, -eps)) / (2 * eps);
      } else {
        numeric = (Shifted(f, v, i, -2 * eps) - 8 * Shifted(f, v, i, -eps) +
                   8 * Shifted(f, v, i, eps) - Shifted(f, v, i, 2 * eps)) /
                  (12 * eps);
      }
      double denom =
          std::max({std::abs(analytic[i]), std::abs(numeric), kGradCheckFloor});
      worst = std::max(worst, std::abs(analytic[i] - numeric) / denom);
    }
  }
  return worst;
}

double GradCheck(const ScalarFn &f, Tensor x, double eps, Stencil stencil) {
  return GradCheck(f, std::span<Tensor>(&x, 1), eps, stencil);
}

}  // namespace evtrig::ad
