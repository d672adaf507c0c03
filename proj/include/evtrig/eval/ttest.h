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

#ifndef EVTRIG_EVAL_TTEST_H_
#define EVTRIG_EVAL_TTEST_H_

#include <span>

namespace evtrig {

struct TTestResult {
  double t = 0;
  double df = 0;
  double p_value = 0;
  // Both sample variances were zero; p is then 0 when mean(a) > mean(b)
  // and 1 otherwise, and t/df are left at 0.
  bool degenerate_variance = false;
};

// Welch's unequal-variance t-test of H1: mean(a) > mean(b). p is the upper
// tail of Student's t at the Welch-Satterthwaite degrees of freedom.
// Each sample needs at least two values (ConfigError otherwise).
TTestResult WelchOneSided(std::span<const double> a, std::span<const double> b);

}  // namespace evtrig

#endif  // EVTRIG_EVAL_TTEST_H_
