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

#include "staircase/utilities.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace staircase {
namespace {

constexpr int kConvexityGridPoints = 100;

double XLogX(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

absl::Status CheckSameSize(const Distribution& a, const Distribution& b) {
  if (a.size() != b.size()) {
    return absl::InvalidArgumentError(
        "dimension mismatch: " + std::to_string(a.size()) + " vs " +
        std::to_string(b.size()) + " symbols");
  }
  return absl::OkStatus();
}

}  // namespace

FDivergence FDivergence::Kl() {
  return FDivergence(Kind::kKl, "kl", [](double x) { return XLogX(x); });
}

FDivergence FDivergence::Tv() {
  return FDivergence(Kind::kTv, "tv",
                     [](double x) { return std::abs(x - 1.0) / 2.0; });
}

FDivergence FDivergence::ChiSquared() {
  return FDivergence(Kind::kChiSquared, "chi2",
                     [](double x) { return (x - 1.0) * (x - 1.0); });
}

absl::StatusOr<FDivergence> FDivergence::Custom(
    std::function<double(double)> f, std::string name) {
  if (!f) return absl::InvalidArgumentError("custom f is empty");
  const double at_one = f(1.0);
  if (!(std::abs(at_one) <= 1e-12)) {
    return absl::InvalidArgumentError("custom f must satisfy f(1) = 0, got " +
                                      std::to_string(at_one));
  }
  return FDivergence(Kind::kCustom, std::move(name), std::move(f));
}

double FDivergence::operator()(double x) const { return f_(x); }

double FDivergence::Perspective(double s, double t) const {
  if (t > 0.0) {
    switch (kind_) {
      case Kind::kKl:
        return s > 0.0 ? s * std::log(s / t) : 0.0;
      case Kind::kTv:
        return std::abs(s - t) / 2.0;
      case Kind::kChiSquared:
        return (s - t) * (s - t) / t;
      case Kind::kCustom:
        return t * f_(s / t);
    }
  }
  if (s <= 0.0) return 0.0;
  switch (kind_) {
    case Kind::kTv:
      return s / 2.0;
    case Kind::kCustom: {
      // Recession slope estimated far out on the ray.
      const double big = 1e12;
      return s * f_(big) / big;
    }
    default:
      return std::numeric_limits<double>::infinity();
  }
}

absl::Status FDivergence::CheckConvexOn(double lo, double hi) const {
  if (kind_ != Kind::kCustom) return absl::OkStatus();
  if (!(hi > lo)) return absl::OkStatus();
  const double h = (hi - lo) / (kConvexityGridPoints - 1);
  std::vector<double> v(kConvexityGridPoints);
  double scale = 1.0;
  for (int i = 0; i < kConvexityGridPoints; ++i) {
    v[i] = f_(lo + i * h);
    if (!std::isfinite(v[i])) {
      return absl::InvalidArgumentError("custom f '" + name_ +
                                        "' is not finite on the ratio range");
    }
    scale = std::max(scale, std::abs(v[i]));
  }
  for (int i = 1; i + 1 < kConvexityGridPoints; ++i) {
    if (v[i - 1] - 2.0 * v[i] + v[i + 1] < -1e-9 * scale) {
      return absl::InvalidArgumentError(
          "custom f '" + name_ + "' is not convex near x = " +
          std::to_string(lo + i * h));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> FDivergenceValue(const FDivergence& f,
                                        const Distribution& m0,
                                        const Distribution& m1) {
  if (absl::Status s = CheckSameSize(m0, m1); !s.ok()) return s;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  double total = 0.0;
  for (int y = 0; y < m0.size(); ++y) {
    if (m1[y] == 0.0 && m0[y] > 0.0 &&
        (f.kind() == FDivergence::Kind::kKl ||
         f.kind() == FDivergence::Kind::kCustom)) {
      return absl::FailedPreconditionError(
          "absolute continuity violated at output " + std::to_string(y));
    }
    if (m1[y] > 0.0) {
      lo = std::min(lo, m0[y] / m1[y]);
      hi = std::max(hi, m0[y] / m1[y]);
    }
    total += f.Perspective(m0[y], m1[y]);
  }
  if (absl::Status s = f.CheckConvexOn(lo, hi); !s.ok()) return s;
  return total;
}

absl::StatusOr<double> KlDivergence(const Distribution& m0,
                                    const Distribution& m1) {
  return FDivergenceValue(FDivergence::Kl(), m0, m1);
}

absl::StatusOr<double> TotalVariation(const Distribution& m0,
                                      const Distribution& m1) {
  return FDivergenceValue(FDivergence::Tv(), m0, m1);
}

absl::StatusOr<double> MutualInformation(const Distribution& p,
                                         const Mechanism& q) {
  if (p.size() != q.inputs()) {
    return absl::InvalidArgumentError(
        "dimension mismatch: prior has " + std::to_string(p.size()) +
        " symbols, mechanism has " + std::to_string(q.inputs()) + " inputs");
  }
  double info = 0.0;
  for (int y = 0; y < q.outputs(); ++y) {
    double m = 0.0;
    for (int x = 0; x < q.inputs(); ++x) m += p[x] * q(x, y);
    if (m <= 0.0) continue;
    for (int x = 0; x < q.inputs(); ++x) {
      const double qxy = q(x, y);
      if (qxy > 0.0) info += p[x] * qxy * std::log(qxy / m);
    }
  }
  return std::max(info, 0.0);
}

absl::StatusOr<UtilitySpec> UtilitySpec::ForHypothesisTesting(
    FDivergence divergence, Distribution p0, Distribution p1) {
  if (absl::Status s = CheckSameSize(p0, p1); !s.ok()) return s;
  if (!p0.IsPositive() || !p1.IsPositive()) {
    return absl::InvalidArgumentError("hypothesis priors must be positive");
  }
  return UtilitySpec(
      HypothesisTesting{std::move(divergence), std::move(p0), std::move(p1)});
}

absl::StatusOr<UtilitySpec> UtilitySpec::ForInformation(Distribution p) {
  if (!p.IsPositive()) {
    return absl::InvalidArgumentError("information prior must be positive");
  }
  return UtilitySpec(InformationPreservation{std::move(p)});
}

int UtilitySpec::k() const {
  if (const auto* ht = hypothesis_testing()) return ht->p0.size();
  return information()->p.size();
}

double ColumnUtility(const UtilitySpec& spec, std::span<const double> col) {
  if (const auto* ht = spec.hypothesis_testing()) {
    double a = 0.0;
    double b = 0.0;
    for (size_t x = 0; x < col.size(); ++x) {
      a += ht->p0[x] * col[x];
      b += ht->p1[x] * col[x];
    }
    if (a <= 0.0 && b <= 0.0) return 0.0;
    return ht->divergence.Perspective(a, b);
  }
  const Distribution& p = spec.information()->p;
  double m = 0.0;
  for (size_t x = 0; x < col.size(); ++x) m += p[x] * col[x];
  if (m <= 0.0) return 0.0;
  double mu = 0.0;
  for (size_t x = 0; x < col.size(); ++x) {
    if (col[x] > 0.0) mu += p[x] * col[x] * std::log(col[x] / m);
  }
  return mu;
}

absl::StatusOr<double> Utility(const UtilitySpec& spec, const Mechanism& q) {
  if (q.inputs() != spec.k()) {
    return absl::InvalidArgumentError(
        "dimension mismatch: utility over " + std::to_string(spec.k()) +
        " symbols, mechanism has " + std::to_string(q.inputs()) + " inputs");
  }
  double total = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  const auto* ht = spec.hypothesis_testing();
  for (int y = 0; y < q.outputs(); ++y) {
    const std::vector<double> col = q.column(y);
    total += ColumnUtility(spec, col);
    if (ht != nullptr && ht->divergence.kind() == FDivergence::Kind::kCustom) {
      double a = 0.0;
      double b = 0.0;
      for (int x = 0; x < q.inputs(); ++x) {
        a += ht->p0[x] * col[x];
        b += ht->p1[x] * col[x];
      }
      if (b > 0.0) {
        lo = std::min(lo, a / b);
        hi = std::max(hi, a / b);
      }
    }
  }
  if (ht != nullptr) {
    if (absl::Status s = ht->divergence.CheckConvexOn(lo, hi); !s.ok()) {
      return s;
    }
  }
  return total;
}

}  // namespace staircase
