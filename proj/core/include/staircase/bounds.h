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

#ifndef STAIRCASE_BOUNDS_H_
#define STAIRCASE_BOUNDS_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "staircase/distribution.h"
#include "staircase/mechanism.h"
#include "staircase/utilities.h"

namespace staircase {

inline constexpr double kBoundTolerance = 1e-9;

// One inequality lhs <= rhs evaluated on concrete numbers. `asserted` marks
// bounds that must hold unconditionally; the rest only hold past an
// instance-dependent privacy threshold and are reported for inspection.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;  // lhs <= rhs + kBoundTolerance
  double slack = 0.0;      // rhs - lhs
  bool asserted = true;
};

BoundReport MakeBoundReport(std::string name, double lhs, double rhs,
                            bool asserted);

// KL(M0 || M1) under BinaryHypothesisTesting(p0, p1, eps), in closed form.
absl::StatusOr<double> BinaryKlClosed(const Distribution& p0,
                                      const Distribution& p1, double eps);
// KL(M0 || M1) under RandomizedResponse(k, eps), in closed form.
absl::StatusOr<double> RrKlClosed(const Distribution& p0,
                                  const Distribution& p1, double eps);
// TV(M0, M1) under the binary mechanism: tanh(eps/2) * TV(P0, P1).
absl::StatusOr<double> BinaryTvClosed(const Distribution& p0,
                                      const Distribution& p1, double eps);
// I(X;Y) under BinaryMutualInformation(p, eps), in closed form.
absl::StatusOr<double> BinaryMiClosed(const Distribution& p, double eps);
// I(X;Y) under RandomizedResponse(k, eps), in closed form.
double RrMiClosed(const Distribution& p, double eps);

// G(P0, P1) = sum_x (1 - P0(x)) log(P1(x) / P0(x)).
double DivergenceGapCoefficient(const Distribution& p0, const Distribution& p1);

// Converse checks for hypothesis testing through an eps-LDP mechanism q:
//   duchi_symmetrized_kl   KL(M0||M1)+KL(M1||M0) <= 4 (e^eps-1)^2 TV^2 [asserted]
//   pinsker                2 TV(M0,M1)^2 <= KL(M0||M1)                 [asserted]
//   tv_contraction         TV(M0,M1) <= tanh(eps/2) TV(P0,P1)          [asserted]
//   symmetrized_kl_high_privacy, kl_high_privacy_expansion,
//   kl_low_privacy_expansion                                           [reported]
absl::StatusOr<std::vector<BoundReport>> HypothesisConverseSuite(
    const Distribution& p0, const Distribution& p1, const Mechanism& q,
    double eps);

// Converse checks for information preservation through q:
//   mi_entropy                  I(X;Y) <= H(X)                   [asserted]
//   mi_high_privacy_expansion, mi_low_privacy_expansion          [reported]
absl::StatusOr<std::vector<BoundReport>> InformationConverseSuite(
    const Distribution& p, const Mechanism& q, double eps);

// Approximation guarantee of the binary mechanism against the LP optimum:
// KL: OPT / (2 (e^eps+1)^2) <= BIN for all eps; MI: OPT / (1 + e^eps) <= BIN,
// asserted for eps <= 1; TV: OPT <= BIN (exact). Needs k <= 8.
absl::StatusOr<BoundReport> ApproximationCheck(const UtilitySpec& spec,
                                               double eps);

struct MarginalRatioLimits {
  double lower = 1.0;
  double upper = 1.0;
};

// ((e^eps-1) P0(T^c) + 1) / ((e^eps-1) P1(T^c) + 1) and the same with T, for
// T = {x : P0(x) >= P1(x)}.
absl::StatusOr<MarginalRatioLimits> ComputeMarginalRatioLimits(
    const Distribution& p0, const Distribution& p1, double eps);

// M0(y) / M1(y) per output (outputs with M1(y) = 0 are skipped).
absl::StatusOr<std::vector<double>> MarginalRatios(const Distribution& p0,
                                                   const Distribution& p1,
                                                   const Mechanism& q);

// Largest relative excursion of any marginal ratio outside the limits,
// reported as lhs against rhs = 0. Reported, not asserted: the limits bind
// only below an instance-dependent eps.
absl::StatusOr<BoundReport> MarginalRatioBounds(const Distribution& p0,
                                                const Distribution& p1,
                                                const Mechanism& q,
                                                double eps);

}  // namespace staircase

#endif  // STAIRCASE_BOUNDS_H_
