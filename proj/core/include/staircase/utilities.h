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

#ifndef STAIRCASE_UTILITIES_H_
#define STAIRCASE_UTILITIES_H_

#include <functional>
#include <span>
#include <string>
#include <variant>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "staircase/distribution.h"
#include "staircase/mechanism.h"

namespace staircase {

// A Csiszar f-divergence generator: convex f with f(1) = 0.
class FDivergence {
 public:
  enum class Kind { kKl, kTv, kChiSquared, kCustom };

  static FDivergence Kl();          // f(x) = x log x
  static FDivergence Tv();          // f(x) = |x - 1| / 2
  static FDivergence ChiSquared();  // f(x) = (x - 1)^2

  // The caller asserts convexity; f(1) must vanish (within 1e-12). Convexity
  // is spot-checked wherever the divergence is evaluated.
  static absl::StatusOr<FDivergence> Custom(std::function<double(double)> f,
                                            std::string name);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  double operator()(double x) const;

  // t * f(s / t) for s, t >= 0, with 0 * f(0/0) = 0 and the t -> 0 limit for
  // s > 0 (infinite for KL and chi-squared, s/2 for TV).
  double Perspective(double s, double t) const;

  // Checks discrete convexity of f on a 100-point grid over [lo, hi].
  // A no-op for the built-in kinds.
  absl::Status CheckConvexOn(double lo, double hi) const;

 private:
  FDivergence(Kind kind, std::string name, std::function<double(double)> f)
      : kind_(kind), name_(std::move(name)), f_(std::move(f)) {}

  Kind kind_;
  std::string name_;
  std::function<double(double)> f_;
};

// D_f(M0 || M1) = sum_y M1(y) f(M0(y) / M1(y)). KL with M0(y) > 0 = M1(y)
// fails with FailedPrecondition (absolute continuity).
absl::StatusOr<double> FDivergenceValue(const FDivergence& f,
                                        const Distribution& m0,
                                        const Distribution& m1);

absl::StatusOr<double> KlDivergence(const Distribution& m0,
                                    const Distribution& m1);
// Half the L1 distance.
absl::StatusOr<double> TotalVariation(const Distribution& m0,
                                      const Distribution& m1);

// I(X;Y) in nats for X ~ P and the channel Q.
absl::StatusOr<double> MutualInformation(const Distribution& p,
                                         const Mechanism& q);

struct HypothesisTesting {
  FDivergence divergence;
  Distribution p0;
  Distribution p1;
};

struct InformationPreservation {
  Distribution p;
};

// Objective U(Q) = sum_y mu(Q_y) with a sublinear column functional mu.
class UtilitySpec {
 public:
  using Variant = std::variant<HypothesisTesting, InformationPreservation>;

  // Both priors must be positive and of equal size.
  static absl::StatusOr<UtilitySpec> ForHypothesisTesting(
      FDivergence divergence, Distribution p0, Distribution p1);
  // The prior must be positive.
  static absl::StatusOr<UtilitySpec> ForInformation(Distribution p);

  int k() const;
  const Variant& kind() const { return kind_; }
  const HypothesisTesting* hypothesis_testing() const {
    return std::get_if<HypothesisTesting>(&kind_);
  }
  const InformationPreservation* information() const {
    return std::get_if<InformationPreservation>(&kind_);
  }

 private:
  explicit UtilitySpec(Variant kind) : kind_(std::move(kind)) {}
  Variant kind_;
};

// mu(col). HT: (P1'c) f(P0'c / P1'c). MI: sum_x P(x) c_x log(c_x / P'c).
// An all-zero column scores 0.
double ColumnUtility(const UtilitySpec& spec, std::span<const double> col);

// sum_y ColumnUtility(spec, Q_y). Custom divergences are convexity-checked
// over the ratio range the columns exercise.
absl::StatusOr<double> Utility(const UtilitySpec& spec, const Mechanism& q);

}  // namespace staircase

#endif  // STAIRCASE_UTILITIES_H_
