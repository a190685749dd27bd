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

#ifndef STAIRCASE_MECHANISMS_H_
#define STAIRCASE_MECHANISMS_H_

#include <vector>

#include "absl/status/statusor.h"
#include "staircase/distribution.h"
#include "staircase/mechanism.h"

namespace staircase {

// The input subset T that a binary mechanism maps preferentially to output 0.
// Members are 0-based and sorted; `mass` is the probability of T under the
// defining prior (P0 for hypothesis testing, P for information).
struct PartitionSet {
  std::vector<int> members;
  double mass = 0.0;
};

// Largest alphabet binary_mi will search exhaustively.
inline constexpr int kMaxSubsetSearchInputs = 24;

// T = {x : P0(x) >= P1(x)}.
absl::StatusOr<PartitionSet> HypothesisTestingPartition(const Distribution& p0,
                                                        const Distribution& p1);

// T minimizing |P(T) - 1/2| over all subsets; ties go to the smaller set, then
// the lexicographically smaller member list. OutOfRange for k > 24.
absl::StatusOr<PartitionSet> InformationPartition(const Distribution& p);

// Two-output staircase mechanism: Q(0|x) = e^eps / (1 + e^eps) on `members`
// and 1 / (1 + e^eps) elsewhere.
absl::StatusOr<Mechanism> BinaryMechanism(int k, const std::vector<int>& members,
                                          double eps);

// Binary mechanism for hypothesis testing between P0 and P1.
absl::StatusOr<Mechanism> BinaryHypothesisTesting(const Distribution& p0,
                                                  const Distribution& p1,
                                                  double eps);

// Binary mechanism for information preservation under P.
absl::StatusOr<Mechanism> BinaryMutualInformation(const Distribution& p,
                                                  double eps);

// k-ary randomized response: the truth with probability e^eps/(k-1+e^eps).
absl::StatusOr<Mechanism> RandomizedResponse(int k, double eps);

// Two-sided geometric noise on {1..k} with per-step ratio e^(-eps/(k-1)),
// with the tails below 1 and above k folded onto the end points.
absl::StatusOr<Mechanism> Geometric(int k, double eps);

// Binary-input, four-output mechanism: outputs 0 and 1 reveal the input with
// probability delta, outputs 2 and 3 run the binary mechanism with the
// remaining 1 - delta.
absl::StatusOr<Mechanism> Quaternary(double eps, double delta);

}  // namespace staircase

#endif  // STAIRCASE_MECHANISMS_H_
