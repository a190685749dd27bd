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

#include "staircase/distribution.h"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "absl/status/status.h"

namespace staircase {
namespace {

absl::Status CheckEntries(const std::vector<double>& values) {
  if (values.size() < 2) {
    return absl::InvalidArgumentError(
        "distribution needs at least two symbols, got " +
        std::to_string(values.size()));
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      return absl::InvalidArgumentError("non-finite mass at index " +
                                        std::to_string(i));
    }
    if (values[i] < 0.0) {
      return absl::InvalidArgumentError("negative mass at index " +
                                        std::to_string(i));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Distribution> Distribution::Create(std::vector<double> values) {
  if (absl::Status s = CheckEntries(values); !s.ok()) return s;
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  if (!(sum > 0.0) || std::abs(sum - 1.0) > kNormalizationGate) {
    return absl::InvalidArgumentError(
        "masses are not normalizable: sum = " + std::to_string(sum));
  }
  for (double& v : values) v /= sum;
  return Distribution(std::move(values));
}

absl::StatusOr<Distribution> Distribution::Normalize(
    std::vector<double> values) {
  if (absl::Status s = CheckEntries(values); !s.ok()) return s;
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  if (!(sum > 0.0)) {
    return absl::InvalidArgumentError(
        "masses are not normalizable: sum = " + std::to_string(sum));
  }
  for (double& v : values) v /= sum;
  return Distribution(std::move(values));
}

bool Distribution::IsPositive() const {
  for (double p : probs_) {
    if (!(p > 0.0)) return false;
  }
  return true;
}

double Distribution::Mass(std::span<const int> members) const {
  double mass = 0.0;
  for (int i : members) mass += probs_[i];
  return mass;
}

absl::StatusOr<Distribution> MakeDistribution(std::vector<double> values) {
  return Distribution::Normalize(std::move(values));
}

absl::StatusOr<Distribution> UniformDistribution(int k) {
  if (k < 2) return absl::InvalidArgumentError("uniform needs k >= 2");
  return Distribution::Create(std::vector<double>(k, 1.0 / k));
}

double Entropy(const Distribution& p) {
  double h = 0.0;
  for (double v : p.probs()) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

}  // namespace staircase
