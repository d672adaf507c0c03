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

#include "evtrig/autodiff/ops.h"
#include "gradient_cases.h"
#include "gtest/gtest.h"

namespace evtrig {
namespace {

constexpr double kTolerance = 1e-4;
constexpr int kPoints = 10;

TEST(GradCheckTest, EveryOpMatchesFiniteDifferences) {
  Rng rng(2024);
  for (const testing::GradientCase &c : testing::OpGradientCases()) {
    for (int i = 0; i < kPoints; ++i) {
      EXPECT_LE(c.check(rng), kTolerance) << c.name << " point " << i;
    }
  }
}

TEST(GradCheckTest, RecurrentCellsMatchFiniteDifferences) {
  Rng rng(7);
  for (const testing::GradientCase &c : testing::CellGradientCases()) {
    for (int i = 0; i < kPoints; ++i) {
      EXPECT_LE(c.check(rng), kTolerance) << c.name << " point " << i;
    }
  }
}

TEST(GradCheckTest, SentenceLossMatchesFiniteDifferences) {
  Rng rng(8);
  for (const testing::GradientCase &c : testing::ModelGradientCases()) {
    EXPECT_LE(c.check(rng), kTolerance) << c.name;
  }
}

// With a larger step the rounding noise on near-zero coordinates shrinks, so
// the same points separate a correct backward pass from a broken one.
TEST(GradCheckTest, SentenceLossConvergesWithLargerStep) {
  Rng rng(8);
  for (const testing::GradientCase &c : testing::ModelGradientCases({1e-4})) {
    EXPECT_LE(c.check(rng), kTolerance) << c.name;
  }
}

// The fourth-order stencil is exact on quartics, where the central one is
// off by h^2 / x^2 in relative terms.
TEST(GradCheckTest, FourthOrderStencilIsExactOnQuartics) {
  ad::Tensor x = ad::Tensor::Vector({0.7, -1.3}, true);
  auto quartic = [&](ad::Tape &tape) {
    ad::Tensor sq = ad::Mul(tape, x, x);
    return ad::Sum(tape, ad::Mul(tape, sq, sq));
  };
  EXPECT_LE(ad::GradCheck(quartic, x, 1e-2, ad::Stencil::kFourthOrder), 1e-9);
  EXPECT_GT(ad::GradCheck(quartic, x, 1e-2), 1e-4);
}

// The checker must notice a backward rule that is off by a factor.
TEST(GradCheckTest, DetectsWrongGradient) {
  ad::Tensor x = ad::Tensor::Vector({0.4, -1.2}, true);
  auto broken = [&](ad::Tape &tape) {
    ad::Tensor y = ad::Sum(tape, ad::Mul(tape, x, x));
    ad::Tensor out = ad::Tensor::Scalar(y.item(), true);
    tape.Record(out, [x = ad::Tensor(x), out]() mutable {
      for (size_t i = 0; i < x.size(); ++i) {
        x.grad()[i] += out.grad()[0] * 3.0 * x.values()[i];
      }
    });
    return out;
  };
  EXPECT_GT(ad::GradCheck(broken, x, 1e-5), 0.3);
}

TEST(GradCheckTest, ExactForLinearFunction) {
  ad::Tensor x = ad::Tensor::Vector({1, 2, 3}, true);
  ad::Tensor w = ad::Tensor::Vector({0.5, -1, 2});
  double err = ad::GradCheck(
      [&](ad::Tape &tape) { return ad::Sum(tape, ad::Mul(tape, x, w)); }, x,
      1e-5);
  EXPECT_LE(err, 1e-9);
}

}  // namespace
}  // namespace evtrig
