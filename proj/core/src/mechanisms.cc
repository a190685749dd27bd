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

#include "staircase/mechanisms.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "absl/status/status.h"

namespace staircase {
namespace {

constexpr double kTieTolerance = 1e-12;

absl::Status CheckEps(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    return absl::InvalidArgumentError("eps must be finite and >= 0");
  }
  return absl::OkStatus();
}

// e^eps / (1 + e^eps) without overflow.
double HighShare(double eps) { return 1.0 / (1.0 + std::exp(-eps)); }
double LowShare(double eps) { return 1.0 / (1.0 + std::exp(eps)); }

std::vector<int> MaskMembers(uint32_t mask, int k) {
  std::vector<int> members;
  for (int i = 0; i < k; ++i) {
    if (mask & (uint32_t{1} << i)) members.push_back(i);
  }
  return members;
}

}  // namespace

absl::StatusOr<PartitionSet> HypothesisTestingPartition(
    const Distribution& p0, const Distribution& p1) {
  if (p0.size() != p1.size()) {
    return absl::InvalidArgumentError("dimension mismatch between P0 and P1");
  }
  PartitionSet t;
  for (int x = 0; x < p0.size(); ++x) {
    if (p0[x] >= p1[x]) t.members.push_back(x);
  }
  t.mass = p0.Mass(t.members);
  return t;
}

absl::StatusOr<PartitionSet> InformationPartition(const Distribution& p) {
  const int k = p.size();
  if (k > kMaxSubsetSearchInputs) {
    return absl::OutOfRangeError("alphabet too large for subset search: k=" +
                                 std::to_string(k));
  }
  uint32_t best_mask = 0;
  double best_gap = 0.5;  // The empty set.
  int best_size = 0;
  std::vector<int> best_members;
  const uint32_t count = uint32_t{1} << k;
  for (uint32_t mask = 1; mask < count; ++mask) {
    double mass = 0.0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      mass += p[std::countr_zero(rest)];
    }
    const double gap = std::abs(mass - 0.5);
    const int size = std::popcount(mask);
    bool better = gap < best_gap - kTieTolerance;
    if (!better && std::abs(gap - best_gap) <= kTieTolerance) {
      if (size < best_size) {
        better = true;
      } else if (size == best_size) {
        better = MaskMembers(mask, k) < best_members;
      }
    }
    if (better) {
      best_mask = mask;
      best_gap = gap;
      best_size = size;
      best_members = MaskMembers(mask, k);
    }
  }
  PartitionSet t;
  t.members = MaskMembers(best_mask, k);
  t.mass = p.Mass(t.members);
  return t;
}

absl::StatusOr<Mechanism> BinaryMechanism(int k,
                                          const std::vector<int>& members,
                                          double eps) {
  if (absl::Status s = CheckEps(eps); !s.ok()) return s;
  if (k < 2) return absl::InvalidArgumentError("k must be >= 2");
  std::vector<std::vector<double>> rows(k, {LowShare(eps), HighShare(eps)});
  for (int x : members) {
    if (x < 0 || x >= k) {
      return absl::InvalidArgumentError("partition member out of range");
    }
    rows[x] = {HighShare(eps), LowShare(eps)};
  }
  return Mechanism::FromRows(rows);
}

absl::StatusOr<Mechanism> BinaryHypothesisTesting(const Distribution& p0,
                                                  const Distribution& p1,
                                                  double eps) {
  absl::StatusOr<PartitionSet> t = HypothesisTestingPartition(p0, p1);
  if (!t.ok()) return t.status();
  return BinaryMechanism(p0.size(), t->members, eps);
}

absl::StatusOr<Mechanism> BinaryMutualInformation(const Distribution& p,
                                                  double eps) {
  absl::StatusOr<PartitionSet> t = InformationPartition(p);
  if (!t.ok()) return t.status();
  return BinaryMechanism(p.size(), t->members, eps);
}

absl::StatusOr<Mechanism> RandomizedResponse(int k, double eps) {
  if (absl::Status s = CheckEps(eps); !s.ok()) return s;
  if (k < 2) return absl::InvalidArgumentError("k must be >= 2");
  // e^eps / (k-1+e^eps) and 1 / (k-1+e^eps), scaled by e^-eps.
  const double shrink = std::exp(-eps);
  const double denom = 1.0 + (k - 1) * shrink;
  std::vector<std::vector<double>> rows(k,
                                        std::vector<double>(k, shrink / denom));
  for (int x = 0; x < k; ++x) rows[x][x] = 1.0 / denom;
  return Mechanism::FromRows(rows);
}

absl::StatusOr<Mechanism> Geometric(int k, double eps) {
  if (absl::Status s = CheckEps(eps); !s.ok()) return s;
  if (!(eps > 0.0)) return absl::InvalidArgumentError("geometric needs eps > 0");
  if (k < 2) return absl::InvalidArgumentError("k must be >= 2");
  const double alpha = std::exp(-eps / (k - 1));
  const double norm = (1.0 - alpha) / (1.0 + alpha);
  std::vector<std::vector<double>> rows(k, std::vector<double>(k, 0.0));
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      rows[x][y] = norm * std::pow(alpha, std::abs(y - x));
    }
    // sum_{m >= 0} norm * alpha^(d + m) = alpha^d / (1 + alpha).
    rows[x][0] = std::pow(alpha, x) / (1.0 + alpha);
    rows[x][k - 1] = std::pow(alpha, k - 1 - x) / (1.0 + alpha);
  }
  return Mechanism::FromRows(rows);
}

absl::StatusOr<Mechanism> Quaternary(double eps, double delta) {
  if (absl::Status s = CheckEps(eps); !s.ok()) return s;
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError("delta must lie in [0, 1]");
  }
  const double hi = (1.0 - delta) * HighShare(eps);
  const double lo = (1.0 - delta) * LowShare(eps);
  return Mechanism::FromRows({{delta, 0.0, lo, hi}, {0.0, delta, hi, lo}});
}

}  // namespace staircase
