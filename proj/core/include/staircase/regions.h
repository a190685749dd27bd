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

#ifndef STAIRCASE_REGIONS_H_
#define STAIRCASE_REGIONS_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "staircase/mechanism.h"

namespace staircase {

// (miss detection, false alarm) probabilities of a binary test.
struct ErrorPoint {
  double p_md = 0.0;
  double p_fa = 0.0;

  bool operator==(const ErrorPoint&) const = default;
};

// Lower-left boundary of the achievable (P_MD, P_FA) region of a binary
// hypothesis test. Vertices run from (0, beta0) to (alpha0, 0) with p_md
// increasing and p_fa decreasing; the boundary is convex. Canonical form has
// no repeated or collinear interior vertices.
class TradeoffRegion {
 public:
  // Canonicalizes a monotone boundary polyline that starts on p_md = 0 and
  // ends on p_fa = 0.
  static TradeoffRegion FromBoundary(std::vector<ErrorPoint> points);

  const std::vector<ErrorPoint>& vertices() const { return vertices_; }

  // Smallest achievable false-alarm probability at miss-detection p_md.
  double FalseAlarmAt(double p_md) const;

  // Convex and monotone, checked with cross products on consecutive segments.
  bool IsConvex(double tol = 1e-12) const;

 private:
  explicit TradeoffRegion(std::vector<ErrorPoint> v) : vertices_(std::move(v)) {}

  std::vector<ErrorPoint> vertices_;
};

// Neyman-Pearson boundary for testing row x0 (null) against row x1. Outputs
// are ordered by likelihood ratio Q(y|x0)/Q(y|x1), descending; equal ratios
// are merged.
absl::StatusOr<TradeoffRegion> ComputeTradeoffRegion(const Mechanism& q, int x0,
                                                     int x1);

// Same, for two explicit distributions over the outputs (e.g. the induced
// marginals M0, M1).
absl::StatusOr<TradeoffRegion> TradeoffRegionOf(std::span<const double> null,
                                                std::span<const double> alt);

// The region allowed by (eps, delta)-LDP:
//   P_FA + e^eps P_MD >= 1 - delta  and  e^eps P_FA + P_MD >= 1 - delta.
absl::StatusOr<TradeoffRegion> RegionEpsDelta(double eps, double delta);

// True when every boundary point of `inner` lies on or above `outer`'s
// boundary (within tol in p_fa), i.e. inner's achievable set is contained in
// outer's. Evaluated at the union of both vertex abscissae.
bool Contains(const TradeoffRegion& outer, const TradeoffRegion& inner,
              double tol);

// Region-based (eps, delta)-LDP test for a two-input mechanism. Agrees with
// IsApproxPrivate().
absl::StatusOr<bool> OperationalPrivacyCheck(const Mechanism& q, double eps,
                                             double delta);

// True iff the two boundaries have the same vertex count and every vertex
// matches within tol in both coordinates.
bool SameBoundary(const TradeoffRegion& a, const TradeoffRegion& b, double tol);

}  // namespace staircase

#endif  // STAIRCASE_REGIONS_H_
