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

#ifndef EVTRIG_UTIL_RNG_H_
#define EVTRIG_UTIL_RNG_H_

#include <cstdint>
#include <random>

namespace evtrig {

// Seeded generator shared by initialization, shuffling and dropout.
class Rng {
 public:
  explicit Rng(uint64_t seed = 1) : engine_(seed) {}

  // Uniform in [0, 1) from the top 53 bits of one draw.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  std::mt19937_64 &engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace evtrig

#endif  // EVTRIG_UTIL_RNG_H_
