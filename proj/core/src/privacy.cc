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

#include "staircase/privacy.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"

namespace staircase {

absl::StatusOr<PrivacyLevel> PrivacyLevel::Create(double eps, double delta) {
  if (!(eps >= 0.0) || std::isnan(eps)) {
    return absl::InvalidArgumentError("eps must be >= 0");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError("delta must lie in [0, 1]");
  }
  return PrivacyLevel{eps, delta};
}

bool IsLocallyPrivate(const Mechanism& q, double eps, double tol) {
  const double bound = std::exp(eps) * (1.0 + tol);
  for (int y = 0; y < q.outputs(); ++y) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int x = 0; x < q.inputs(); ++x) {
      lo = std::min(lo, q(x, y));
      hi = std::max(hi, q(x, y));
    }
    // The extreme pair decides the column.
    if (hi > bound * lo + kMassFloor) return false;
  }
  return true;
}

bool IsApproxPrivate(const Mechanism& q, double eps, double delta,
                     double tol) {
  const double scale = std::exp(eps);
  for (int x = 0; x < q.inputs(); ++x) {
    for (int xp = 0; xp < q.inputs(); ++xp) {
      if (x == xp) continue;
      double excess = 0.0;
      for (int y = 0; y < q.outputs(); ++y) {
        const double gap = q(x, y) - scale * q(xp, y);
        if (gap > 0.0) excess += gap;
      }
      if (excess > delta + tol) return false;
    }
  }
  return true;
}

bool IsStaircase(const Mechanism& q, double eps, double tol) {
  for (int y = 0; y < q.outputs(); ++y) {
    const std::vector<double> col = q.column(y);
    const bool any_zero =
        std::any_of(col.begin(), col.end(), [](double v) { return v <= 0.0; });
    const bool all_zero =
        std::all_of(col.begin(), col.end(), [](double v) { return v <= 0.0; });
    if (all_zero) continue;
    if (any_zero) return false;
    for (size_t a = 0; a < col.size(); ++a) {
      for (size_t b = a + 1; b < col.size(); ++b) {
        const double r = std::abs(std::log(col[a] / col[b]));
        if (std::abs(r) > tol && std::abs(r - eps) > tol) return false;
      }
    }
  }
  return true;
}

double EffectiveEpsilon(const Mechanism& q) {
  double worst = 0.0;
  for (int y = 0; y < q.outputs(); ++y) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int x = 0; x < q.inputs(); ++x) {
      lo = std::min(lo, q(x, y));
      hi = std::max(hi, q(x, y));
    }
    if (hi == 0.0) continue;
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::log(hi / lo));
  }
  return worst;
}

}  // namespace staircase
