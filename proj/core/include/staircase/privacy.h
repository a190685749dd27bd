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

#ifndef STAIRCASE_PRIVACY_H_
#define STAIRCASE_PRIVACY_H_

#include "absl/status/statusor.h"
#include "staircase/mechanism.h"

namespace staircase {

// Relative slack on likelihood ratios used by the predicates below.
inline constexpr double kDefaultPrivacyTolerance = 1e-9;
// Masses at or below this are treated as zero when comparing ratios.
inline constexpr double kMassFloor = 1e-12;

// A validated (eps, delta) pair: eps >= 0 (nats), delta in [0, 1].
struct PrivacyLevel {
  double eps = 0.0;
  double delta = 0.0;

  static absl::StatusOr<PrivacyLevel> Create(double eps, double delta);
};

// eps-LDP: Q(y|x) <= e^eps * Q(y|x') * (1 + tol) + kMassFloor for every
// output y and ordered input pair. A column mixing zero and nonzero entries
// therefore fails for every finite eps.
bool IsLocallyPrivate(const Mechanism& q, double eps,
                      double tol = kDefaultPrivacyTolerance);

// (eps, delta)-LDP. For each ordered pair (x, x') the worst output set is
// S* = {y : Q(y|x) > e^eps Q(y|x')}; requires Q(S*|x) - e^eps Q(S*|x') <=
// delta + tol.
bool IsApproxPrivate(const Mechanism& q, double eps, double delta,
                     double tol = kDefaultPrivacyTolerance);

// Every column is either all zero or strictly positive with all pairwise
// |log ratios| within tol of 0 or of eps.
bool IsStaircase(const Mechanism& q, double eps,
                 double tol = kDefaultPrivacyTolerance);

// Smallest eps for which q is eps-LDP: the largest column log-ratio. Returns
// +infinity when some column mixes zero and nonzero entries.
double EffectiveEpsilon(const Mechanism& q);

}  // namespace staircase

#endif  // STAIRCASE_PRIVACY_H_
