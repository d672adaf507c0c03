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

#include "evtrig/eval/ttest.h"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "evtrig/error.h"

namespace evtrig {

namespace {

void MeanVar(std::span<const double> x, double *mean, double *var) {
  double m = 0;
  for (double v : x) m += v;
  m /= static_cast<double>(x.size());
  double ss = 0;
  for (double v : x) ss += (v - m) * (v - m);
  *mean = m;
  *var = ss / static_cast<double>(x.size() - 1);
}

}  // namespace

TTestResult WelchOneSided(std::span<const double> a,
                          std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorCode::kConfigError,
                "t-test needs at least two scores per sample");
  }
  double mean_a, var_a, mean_b, var_b;
  MeanVar(a, &mean_a, &var_a);
  MeanVar(b, &mean_b, &var_b);

  TTestResult result;
  const double se_a = var_a / static_cast<double>(a.size());
  const double se_b = var_b / static_cast<double>(b.size());
  if (se_a + se_b == 0.0) {
    result.degenerate_variance = true;
    result.p_value = mean_a > mean_b ? 0.0 : 1.0;
    return result;
  }
  result.t = (mean_a - mean_b) / std::sqrt(se_a + se_b);
  result.df = (se_a + se_b) * (se_a + se_b) /
              (se_a * se_a / static_cast<double>(a.size() - 1) +
               se_b * se_b / static_cast<double>(b.size() - 1));
  boost::math::students_t dist(result.df);
  result.p_value = boost::math::cdf(boost::math::complement(dist, result.t));
  return result;
}

}  // namespace evtrig
