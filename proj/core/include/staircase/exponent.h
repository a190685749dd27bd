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

#ifndef STAIRCASE_EXPONENT_H_
#define STAIRCASE_EXPONENT_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "staircase/distribution.h"
#include "staircase/mechanism.h"

namespace staircase {

struct ExponentReport {
  double estimate = 0.0;   // -(1/n) log beta
  double kl = 0.0;         // D(M0 || M1), the Chernoff-Stein rate
  double log_beta = 0.0;   // log type-II error at the calibrated threshold
  double beta = 0.0;       // may underflow to 0; see log_beta
  double threshold = 0.0;  // log-likelihood-ratio cut
  double relative_error = 0.0;
};

// Monte-Carlo type-II error exponent of the likelihood-ratio test between
// the privatized marginals of p0 and p1 through q. The threshold is the
// empirical alpha_star quantile of the statistic under H0; beta is estimated
// from the same H0 samples by importance weighting, which reaches error
// levels far below 1 / trials.
absl::StatusOr<ExponentReport> RunExponentSimulation(
    const Distribution& p0, const Distribution& p1, const Mechanism& q, int n,
    int trials, double alpha_star, uint64_t seed);

}  // namespace staircase

#endif  // STAIRCASE_EXPONENT_H_
