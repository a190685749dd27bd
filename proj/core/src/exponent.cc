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

#include "staircase/exponent.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "staircase/random.h"
#include "staircase/utilities.h"

namespace staircase {

absl::StatusOr<ExponentReport> RunExponentSimulation(
    const Distribution& p0, const Distribution& p1, const Mechanism& q, int n,
    int trials, double alpha_star, uint64_t seed) {
  if (n < 100) return absl::InvalidArgumentError("n must be at least 100");
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (!(alpha_star > 0.0 && alpha_star < 1.0)) {
    return absl::InvalidArgumentError("alpha_star must lie in (0, 1)");
  }
  absl::StatusOr<Distribution> m0 = InducedMarginal(p0, q);
  if (!m0.ok()) return m0.status();
  absl::StatusOr<Distribution> m1 = InducedMarginal(p1, q);
  if (!m1.ok()) return m1.status();

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> cdf;
  std::vector<double> llr;
  double acc = 0.0;
  for (int y = 0; y < m0->size(); ++y) {
    acc += (*m0)[y];
    cdf.push_back(acc);
    llr.push_back((*m1)[y] > 0.0 ? std::log((*m0)[y] / (*m1)[y]) : inf);
  }

  Rng rng(seed);
  std::vector<double> stats(trials);
  for (double& s : stats) {
    s = 0.0;
    for (int i = 0; i < n; ++i) s += llr[rng.Categorical(cdf)];
  }

  std::vector<double> sorted = stats;
  std::sort(sorted.begin(), sorted.end());
  const int cut = std::clamp(
      static_cast<int>(std::floor(alpha_star * trials)), 0, trials - 1);
  const double tau = sorted[cut];

  // beta = E_{M0}[1{L >= tau} exp(-L)], accumulated in log space.
  double top = -inf;
  for (double s : stats) {
    if (s >= tau) top = std::max(top, -s);
  }
  double sum = 0.0;
  if (std::isfinite(top)) {
    for (double s : stats) {
      if (s >= tau) sum += std::exp(-s - top);
    }
  }
  const double log_beta =
      sum > 0.0 ? top + std::log(sum) - std::log(static_cast<double>(trials))
                : -inf;

  ExponentReport report;
  absl::StatusOr<double> kl = KlDivergence(*m0, *m1);
  report.kl = kl.ok() ? *kl : inf;
  report.threshold = tau;
  report.log_beta = log_beta;
  report.beta = std::exp(log_beta);
  report.estimate = -log_beta / n;
  report.relative_error =
      report.kl > 0.0 ? std::abs(report.estimate - report.kl) / report.kl
                      : std::abs(report.estimate);
  return report;
}

}  // namespace staircase
