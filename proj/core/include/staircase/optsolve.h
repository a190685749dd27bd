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

#ifndef STAIRCASE_OPTSOLVE_H_
#define STAIRCASE_OPTSOLVE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "staircase/mechanism.h"
#include "staircase/pattern_matrix.h"
#include "staircase/utilities.h"

namespace staircase {

// Largest input alphabet the LP is built for (4096 pattern columns).
inline constexpr int kMaxLpInputs = 12;
// Largest input alphabet VertexOracle() will enumerate.
inline constexpr int kMaxOracleInputs = 4;
// Entries of theta above this count as basic when extracting a mechanism.
inline constexpr double kNonzeroThreshold = 1e-10;
// Ratio-test pivots smaller than this (relative to the entering direction)
// are ignored.
inline constexpr double kPivotTolerance = 1e-10;

// maximize objective' theta  s.t.  pattern * theta = 1, theta >= 0,
// where objective[j] = mu(pattern column j).
struct StaircaseLp {
  int k = 0;
  double eps = 0.0;
  PatternMatrix pattern;
  std::vector<double> objective;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> theta;   // One weight per pattern column.
  double value = 0.0;
  std::vector<int64_t> basis;  // Basic column indices at termination.
  int pivots = 0;
};

// OutOfRange when spec.k() > kMaxLpInputs; InvalidArgument for eps < 0.
absl::StatusOr<StaircaseLp> BuildLp(const UtilitySpec& spec, double eps);

// Primal simplex with Bland's rule, starting from the basis of the k
// single-e^eps patterns (randomized response), which is feasible for every
// eps > 0. eps = 0 is solved directly. The basis is refactorized each pivot.
// Returns Internal ("numerical breakdown") if no admissible pivot exists
// while an improving column does, or the pivot budget runs out.
absl::StatusOr<LpSolution> Solve(const StaircaseLp& lp);

// Q = S * diag(theta) restricted to columns with theta_j > kNonzeroThreshold.
// FailedPrecondition ("degenerate basis") when more than k columns survive or
// the solution is not optimal.
absl::StatusOr<Mechanism> ExtractMechanism(const LpSolution& solution,
                                           const StaircaseLp& lp);

// Brute-force optimum: every subset of at most k columns, least-squares
// solved, kept when feasible. Independent of Solve(); k <= kMaxOracleInputs.
absl::StatusOr<double> VertexOracle(const StaircaseLp& lp);

struct OptimalMechanism {
  double value = 0.0;
  Mechanism mechanism;
  LpSolution solution;
};

// BuildLp + Solve + ExtractMechanism.
absl::StatusOr<OptimalMechanism> SolveOptimal(const UtilitySpec& spec,
                                              double eps);

}  // namespace staircase

#endif  // STAIRCASE_OPTSOLVE_H_
