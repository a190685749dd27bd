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

#include "staircase/regions.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "absl/status/status.h"

namespace staircase {
namespace {

constexpr double kPointTolerance = 1e-15;
// Relative tolerance for treating two likelihood ratios as equal.
constexpr double kRatioTieTolerance = 1e-12;
constexpr double kContainmentTolerance = 1e-9;

double Cross(const ErrorPoint& o, const ErrorPoint& a, const ErrorPoint& b) {
  return (a.p_md - o.p_md) * (b.p_fa - o.p_fa) -
         (a.p_fa - o.p_fa) * (b.p_md - o.p_md);
}

bool Near(const ErrorPoint& a, const ErrorPoint& b) {
  return std::abs(a.p_md - b.p_md) <= kPointTolerance &&
         std::abs(a.p_fa - b.p_fa) <= kPointTolerance;
}

}  // namespace

TradeoffRegion TradeoffRegion::FromBoundary(std::vector<ErrorPoint> points) {
  std::vector<ErrorPoint> v;
  for (const ErrorPoint& p : points) {
    if (v.empty() || !Near(v.back(), p)) v.push_back(p);
  }
  // Vertical run on p_md = 0: keep its lowest point.
  while (v.size() >= 2 && std::abs(v[1].p_md - v[0].p_md) <= kPointTolerance) {
    v.erase(v.begin());
  }
  // Horizontal run on p_fa = 0: keep its leftmost point.
  while (v.size() >= 2 &&
         std::abs(v[v.size() - 2].p_fa - v.back().p_fa) <= kPointTolerance) {
    v.pop_back();
  }
  std::vector<ErrorPoint> out;
  for (const ErrorPoint& p : v) {
    while (out.size() >= 2 &&
           std::abs(Cross(out[out.size() - 2], out.back(), p)) <= 1e-14) {
      out.pop_back();
    }
    out.push_back(p);
  }
  return TradeoffRegion(std::move(out));
}

double TradeoffRegion::FalseAlarmAt(double p_md) const {
  if (vertices_.empty()) return 0.0;
  if (p_md <= vertices_.front().p_md) return vertices_.front().p_fa;
  if (p_md >= vertices_.back().p_md) return vertices_.back().p_fa;
  for (size_t i = 1; i < vertices_.size(); ++i) {
    const ErrorPoint& a = vertices_[i - 1];
    const ErrorPoint& b = vertices_[i];
    if (p_md <= b.p_md) {
      const double t = (p_md - a.p_md) / (b.p_md - a.p_md);
      return a.p_fa + t * (b.p_fa - a.p_fa);
    }
  }
  return vertices_.back().p_fa;
}

bool TradeoffRegion::IsConvex(double tol) const {
  for (size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i].p_md < vertices_[i - 1].p_md - tol) return false;
    if (vertices_[i].p_fa > vertices_[i - 1].p_fa + tol) return false;
  }
  for (size_t i = 2; i < vertices_.size(); ++i) {
    // Counter-clockwise turn along a lower-left convex boundary.
    if (Cross(vertices_[i - 2], vertices_[i - 1], vertices_[i]) < -tol) {
      return false;
    }
  }
  return true;
}

absl::StatusOr<TradeoffRegion> TradeoffRegionOf(std::span<const double> null,
                                                std::span<const double> alt) {
  if (null.size() != alt.size()) {
    return absl::InvalidArgumentError("dimension mismatch between test rows");
  }
  struct Output {
    double a;  // mass under the null
    double b;  // mass under the alternative
  };
  std::vector<Output> outputs;
  for (size_t y = 0; y < null.size(); ++y) {
    if (null[y] > 0.0 || alt[y] > 0.0) outputs.push_back({null[y], alt[y]});
  }
  // Descending a/b, compared by cross-multiplication so b = 0 sorts first.
  std::stable_sort(outputs.begin(), outputs.end(),
                   [](const Output& l, const Output& r) {
                     return l.a * r.b > r.a * l.b;
                   });
  std::vector<Output> merged;
  for (const Output& o : outputs) {
    if (!merged.empty()) {
      Output& m = merged.back();
      const double lhs = m.a * o.b;
      const double rhs = o.a * m.b;
      if (std::abs(lhs - rhs) <=
          kRatioTieTolerance * std::max(std::abs(lhs), std::abs(rhs))) {
        m.a += o.a;
        m.b += o.b;
        continue;
      }
    }
    merged.push_back(o);
  }
  // Deciding for the null on a set A: P_MD = alt(A), P_FA = 1 - null(A).
  std::vector<ErrorPoint> points{{0.0, 1.0}};
  double md = 0.0;
  double kept = 0.0;
  for (const Output& o : merged) {
    md += o.b;
    kept += o.a;
    points.push_back({std::min(md, 1.0), std::max(1.0 - kept, 0.0)});
  }
  points.back() = {1.0, 0.0};
  return TradeoffRegion::FromBoundary(std::move(points));
}

absl::StatusOr<TradeoffRegion> ComputeTradeoffRegion(const Mechanism& q, int x0,
                                                     int x1) {
  if (x0 < 0 || x1 < 0 || x0 >= q.inputs() || x1 >= q.inputs()) {
    return absl::InvalidArgumentError("dimension mismatch: input index out of "
                                      "range");
  }
  if (x0 == x1) return absl::InvalidArgumentError("x0 and x1 must differ");
  return TradeoffRegionOf(q.row(x0), q.row(x1));
}

absl::StatusOr<TradeoffRegion> RegionEpsDelta(double eps, double delta) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    return absl::InvalidArgumentError("eps must be finite and >= 0");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError("delta must lie in [0, 1]");
  }
  const double reach = 1.0 - delta;
  const double cross = reach / (1.0 + std::exp(eps));
  return TradeoffRegion::FromBoundary(
      {{0.0, reach}, {cross, cross}, {reach, 0.0}});
}

bool Contains(const TradeoffRegion& outer, const TradeoffRegion& inner,
              double tol) {
  std::vector<double> xs;
  for (const ErrorPoint& p : outer.vertices()) xs.push_back(p.p_md);
  for (const ErrorPoint& p : inner.vertices()) xs.push_back(p.p_md);
  for (double x : xs) {
    if (inner.FalseAlarmAt(x) < outer.FalseAlarmAt(x) - tol) return false;
  }
  return true;
}

absl::StatusOr<bool> OperationalPrivacyCheck(const Mechanism& q, double eps,
                                             double delta) {
  if (q.inputs() != 2) {
    return absl::InvalidArgumentError(
        "operational check needs a binary-input mechanism, got " +
        std::to_string(q.inputs()) + " inputs");
  }
  absl::StatusOr<TradeoffRegion> allowed = RegionEpsDelta(eps, delta);
  if (!allowed.ok()) return allowed.status();
  absl::StatusOr<TradeoffRegion> region = ComputeTradeoffRegion(q, 0, 1);
  if (!region.ok()) return region.status();
  return Contains(*allowed, *region, kContainmentTolerance);
}

bool SameBoundary(const TradeoffRegion& a, const TradeoffRegion& b,
                  double tol) {
  if (a.vertices().size() != b.vertices().size()) return false;
  for (size_t i = 0; i < a.vertices().size(); ++i) {
    if (std::abs(a.vertices()[i].p_md - b.vertices()[i].p_md) > tol ||
        std::abs(a.vertices()[i].p_fa - b.vertices()[i].p_fa) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace staircase
