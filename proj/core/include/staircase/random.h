//
// Copyright 2026 The Staircase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef STAIRCASE_RANDOM_H_
#define STAIRCASE_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

#include "staircase/distribution.h"

namespace staircase {

uint64_t SplitMix64(uint64_t x);

// Seed for one independent stream, so results do not depend on the order in
// which streams are consumed. The base seed is mixed first: a raw
// seed ^ stream would map nearby seeds onto the same set of streams.
inline uint64_t StreamSeed(uint64_t seed, uint64_t stream) {
  return SplitMix64(SplitMix64(seed) ^ stream);
}

// mt19937_64 with a platform-independent uniform draw.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Exponential();
  // Index drawn from a cumulative distribution (last entry ~1).
  int Categorical(const std::vector<double>& cdf);

 private:
  std::mt19937_64 engine_;
};

// Uniform point on the probability simplex (Dirichlet with all parameters 1).
Distribution SampleUniformSimplex(int k, Rng& rng);

}  // namespace staircase

#endif  // STAIRCASE_RANDOM_H_
