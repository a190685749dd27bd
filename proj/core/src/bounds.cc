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

#include "staircase/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "staircase/mechanisms.h"
#include "staircase/optsolve.h"

namespace staircase {
namespace {

constexpr int kMaxApproximationInputs = 8;

absl::Status CheckPriors(const Distribution& p0, const Distribution& p1) {
  if (p0.size() != p1.size()) {
    return absl::InvalidArgumentError("dimension mismatch between P0 and P1");
  }
  if (!p0.IsPositive() || !p1.IsPositive()) {
    return absl::InvalidArgumentError("priors must be positive");
  }
  return absl::OkStatus();
}

// ((e^eps-1) a + 1) / (e^eps+1) * log((1+(e^eps-1) a) / (1+(e^eps-1) b)).
double BinaryKlTerm(double a, double b, double eps) {
  const double lift = std::expm1(eps);
  const double num = 1.0 + lift * a;
  return num / (lift + 2.0) * std::log(num / (1.0 + lift * b));
}

// One brace of the binary-mechanism mutual information, for the output that
// favours a set of mass `in` (its complement has mass `out`).
double BinaryMiTerm(double in, double out, double eps) {
  const double e = std::exp(eps);
  const double m = out + e * in;
  double v = 0.0;
  if (in > 0.0) v += in * e * std::log(e / m);
  if (out > 0.0) v += out * std::log(1.0 / m);
  return v / (e + 1.0);
}

}  // namespace

BoundReport MakeBoundReport(std::string name, double lhs, double rhs,
                            bool asserted) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.satisfied = lhs <= rhs + kBoundTolerance;
  r.slack = rhs - lhs;
  r.asserted = asserted;
  return r;
}

absl::StatusOr<double> BinaryKlClosed(const Distribution& p0,
                                      const Distribution& p1, double eps) {
  if (absl::Status s = CheckPriors(p0, p1); !s.ok()) return s;
  absl::StatusOr<PartitionSet> t = HypothesisTestingPartition(p0, p1);
  if (!t.ok()) return t.status();
  const double p0t = p0.Mass(t->members);
  const double p1t = p1.Mass(t->members);
  return BinaryKlTerm(p0t, p1t, eps) + BinaryKlTerm(1.0 - p0t, 1.0 - p1t, eps);
}

absl::StatusOr<double> RrKlClosed(const Distribution& p0,
                                  const Distribution& p1, double eps) {
  if (absl::Status s = CheckPriors(p0, p1); !s.ok()) return s;
  const double lift = std::expm1(eps);
  const int k = p0.size();
  double sum = 0.0;
  for (int x = 0; x < k; ++x) {
    const double num = p0[x] * lift + 1.0;
    sum += num * std::log(num / (p1[x] * lift + 1.0));
  }
  return sum / (lift + k);
}

absl::StatusOr<double> BinaryTvClosed(const Distribution& p0,
                                      const Distribution& p1, double eps) {
  if (absl::Status s = CheckPriors(p0, p1); !s.ok()) return s;
  absl::StatusOr<double> tv = TotalVariation(p0, p1);
  if (!tv.ok()) return tv.status();
  return std::tanh(eps / 2.0) * *tv;
}

absl::StatusOr<double> BinaryMiClosed(const Distribution& p, double eps) {
  absl::StatusOr<PartitionSet> t = InformationPartition(p);
  if (!t.ok()) return t.status();
  const double in = t->mass;
  const double out = 1.0 - in;
  return BinaryMiTerm(in, out, eps) + BinaryMiTerm(out, in, eps);
}

double RrMiClosed(const Distribution& p, double eps) {
  const double e = std::exp(eps);
  const double lift = std::expm1(eps);
  const int k = p.size();
  double sum = 0.0;
  for (int x = 0; x < k; ++x) {
    const double m = p[x] * lift + 1.0;
    sum += p[x] * e * std::log(e / m) + (1.0 - p[x]) * std::log(1.0 / m);
  }
  return sum / (lift + k);
}

double DivergenceGapCoefficient(const Distribution& p0,
                                const Distribution& p1) {
  double g = 0.0;
  for (int x = 0; x < p0.size(); ++x) {
    g += (1.0 - p0[x]) * std::log(p1[x] / p0[x]);
  }
  return g;
}

absl::StatusOr<std::vector<BoundReport>> HypothesisConverseSuite(
    const Distribution& p0, const Distribution& p1, const Mechanism& q,
    double eps) {
  if (absl::Status s = CheckPriors(p0, p1); !s.ok()) return s;
  absl::StatusOr<Distribution> m0 = InducedMarginal(p0, q);
  if (!m0.ok()) return m0.status();
  absl::StatusOr<Distribution> m1 = InducedMarginal(p1, q);
  if (!m1.ok()) return m1.status();
  absl::StatusOr<double> kl01 = KlDivergence(*m0, *m1);
  if (!kl01.ok()) return kl01.status();
  absl::StatusOr<double> kl10 = KlDivergence(*m1, *m0);
  if (!kl10.ok()) return kl10.status();
  absl::StatusOr<double> tv_m = TotalVariation(*m0, *m1);
  if (!tv_m.ok()) return tv_m.status();
  absl::StatusOr<double> tv_p = TotalVariation(p0, p1);
  if (!tv_p.ok()) return tv_p.status();
  absl::StatusOr<double> kl_p = KlDivergence(p0, p1);
  if (!kl_p.ok()) return kl_p.status();

  const double lift = std::expm1(eps);
  const double e = std::exp(eps);
  const double sym = *kl01 + *kl10;
  const double tv2 = *tv_p * *tv_p;
  const double high_privacy = lift * lift / (e + 1.0) * tv2;

  std::vector<BoundReport> out;
  out.push_back(MakeBoundReport("duchi_symmetrized_kl", sym,
                                4.0 * lift * lift * tv2, true));
  out.push_back(
      MakeBoundReport("pinsker", 2.0 * *tv_m * *tv_m, *kl01, true));
  out.push_back(MakeBoundReport("tv_contraction", *tv_m,
                                std::tanh(eps / 2.0) * *tv_p, true));
  out.push_back(MakeBoundReport("symmetrized_kl_high_privacy", sym,
                                2.0 * high_privacy, false));
  out.push_back(
      MakeBoundReport("kl_high_privacy_expansion", *kl01, high_privacy, false));
  const double low_privacy =
      *kl_p - DivergenceGapCoefficient(p0, p1) * std::exp(-eps);
  out.push_back(MakeBoundReport("kl_low_privacy_expansion",
                                std::abs(*kl01 - low_privacy),
                                10.0 * std::exp(-2.0 * eps), false));
  return out;
}

absl::StatusOr<std::vector<BoundReport>> InformationConverseSuite(
    const Distribution& p, const Mechanism& q, double eps) {
  absl::StatusOr<double> info = MutualInformation(p, q);
  if (!info.ok()) return info.status();
  absl::StatusOr<PartitionSet> t = InformationPartition(p);
  if (!t.ok()) return t.status();
  const double h = Entropy(p);
  const int k = p.size();
  std::vector<BoundReport> out;
  out.push_back(MakeBoundReport("mi_entropy", *info, h, true));
  out.push_back(MakeBoundReport("mi_high_privacy_expansion", *info,
                                0.5 * t->mass * (1.0 - t->mass) * eps * eps,
                                false));
  const double low_privacy = h - (k - 1) * eps * std::exp(-eps);
  out.push_back(MakeBoundReport("mi_low_privacy_expansion",
                                std::abs(*info - low_privacy),
                                10.0 * std::exp(-2.0 * eps), false));
  return out;
}

absl::StatusOr<BoundReport> ApproximationCheck(const UtilitySpec& spec,
                                               double eps) {
  if (spec.k() > kMaxApproximationInputs) {
    return absl::OutOfRangeError("approximation check needs k <= 8");
  }
  absl::StatusOr<OptimalMechanism> opt = SolveOptimal(spec, eps);
  if (!opt.ok()) return opt.status();
  const double e = std::exp(eps);
  if (const auto* ht = spec.hypothesis_testing()) {
    absl::StatusOr<Mechanism> bin = BinaryHypothesisTesting(ht->p0, ht->p1, eps);
    if (!bin.ok()) return bin.status();
    absl::StatusOr<double> bin_value = Utility(spec, *bin);
    if (!bin_value.ok()) return bin_value.status();
    switch (ht->divergence.kind()) {
      case FDivergence::Kind::kKl:
        return MakeBoundReport("binary_kl_approximation",
                               opt->value / (2.0 * (e + 1.0) * (e + 1.0)),
                               *bin_value, true);
      case FDivergence::Kind::kTv:
        return MakeBoundReport("binary_tv_optimality", opt->value, *bin_value,
                               true);
      default:
        return absl::InvalidArgumentError(
            "no approximation guarantee for divergence '" +
            ht->divergence.name() + "'");
    }
  }
  const Distribution& p = spec.information()->p;
  absl::StatusOr<Mechanism> bin = BinaryMutualInformation(p, eps);
  if (!bin.ok()) return bin.status();
  absl::StatusOr<double> bin_value = MutualInformation(p, *bin);
  if (!bin_value.ok()) return bin_value.status();
  return MakeBoundReport("binary_mi_approximation", opt->value / (1.0 + e),
                         *bin_value, eps <= 1.0);
}

absl::StatusOr<MarginalRatioLimits> ComputeMarginalRatioLimits(
    const Distribution& p0, const Distribution& p1, double eps) {
  absl::StatusOr<PartitionSet> t = HypothesisTestingPartition(p0, p1);
  if (!t.ok()) return t.status();
  const double lift = std::expm1(eps);
  const double p0t = p0.Mass(t->members);
  const double p1t = p1.Mass(t->members);
  MarginalRatioLimits limits;
  limits.lower = (lift * (1.0 - p0t) + 1.0) / (lift * (1.0 - p1t) + 1.0);
  limits.upper = (lift * p0t + 1.0) / (lift * p1t + 1.0);
  return limits;
}

absl::StatusOr<std::vector<double>> MarginalRatios(const Distribution& p0,
                                                   const Distribution& p1,
                                                   const Mechanism& q) {
  absl::StatusOr<Distribution> m0 = InducedMarginal(p0, q);
  if (!m0.ok()) return m0.status();
  absl::StatusOr<Distribution> m1 = InducedMarginal(p1, q);
  if (!m1.ok()) return m1.status();
  std::vector<double> ratios;
  for (int y = 0; y < m0->size(); ++y) {
    if ((*m1)[y] > 0.0) ratios.push_back((*m0)[y] / (*m1)[y]);
  }
  return ratios;
}

absl::StatusOr<BoundReport> MarginalRatioBounds(const Distribution& p0,
                                                const Distribution& p1,
                                                const Mechanism& q,
                                                double eps) {
  if (absl::Status s = CheckPriors(p0, p1); !s.ok()) return s;
  absl::StatusOr<MarginalRatioLimits> limits =
      ComputeMarginalRatioLimits(p0, p1, eps);
  if (!limits.ok()) return limits.status();
  absl::StatusOr<std::vector<double>> ratios = MarginalRatios(p0, p1, q);
  if (!ratios.ok()) return ratios.status();
  double excursion = 0.0;
  for (double r : *ratios) {
    excursion = std::max(excursion, (r - limits->upper) / limits->upper);
    excursion = std::max(excursion, (limits->lower - r) / limits->lower);
  }
  return MakeBoundReport("marginal_ratio", excursion, 0.0, false);
}

}  // namespace staircase
