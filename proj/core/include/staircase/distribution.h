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

#ifndef STAIRCASE_DISTRIBUTION_H_
#define STAIRCASE_DISTRIBUTION_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace staircase {

// A point on the probability simplex over {0, ..., k-1}, k >= 2. Entries are
// nonnegative and sum to one within 1e-12. Immutable once built.
class Distribution {
 public:
  // Largest deviation of the input sum from 1 that Create() will silently
  // normalize away.
  static constexpr double kNormalizationGate = 1e-9;

  // Validates and normalizes `values`. Fails with InvalidArgument when fewer
  // than two entries are given, an entry is negative or non-finite, or the sum
  // is not within kNormalizationGate of one.
  static absl::StatusOr<Distribution> Create(std::vector<double> values);

  // Like Create() but accepts any positive finite sum, dividing through by it.
  static absl::StatusOr<Distribution> Normalize(std::vector<double> values);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  // True when every entry is strictly positive.
  bool IsPositive() const;

  // Probability of the subset `members` (0-based indices).
  double Mass(std::span<const int> members) const;

 private:
  explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

// Normalized copy of `values` (divided by their sum). Negative entries and
// non-positive sums are reported as InvalidArgument.
absl::StatusOr<Distribution> MakeDistribution(std::vector<double> values);

// Uniform distribution over k symbols.
absl::StatusOr<Distribution> UniformDistribution(int k);

// Shannon entropy in nats.
double Entropy(const Distribution& p);

}  // namespace staircase

#endif  // STAIRCASE_DISTRIBUTION_H_
