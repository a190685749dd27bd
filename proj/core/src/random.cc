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

#include "staircase/random.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace staircase {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double Rng::Exponential() { return -std::log1p(-Uniform()); }

int Rng::Categorical(const std::vector<double>& cdf) {
  const double u = Uniform() * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<int>(it - cdf.begin());
}

Distribution SampleUniformSimplex(int k, Rng& rng) {
  std::vector<double> w(k);
  for (double& v : w) {
    // Keep strictly positive so the priors stay in the LP's domain.
    do {
      v = rng.Exponential();
    } while (v <= 0.0);
  }
  return *Distribution::Normalize(std::move(w));
}

}  // namespace staircase
