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

#include "staircase/optsolve.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "Eigen/Dense"
#include "absl/status/status.h"

namespace staircase {
namespace {

// Relative reduced-cost threshold: d_j must exceed this fraction of the
// magnitudes that cancel in mu_j - y' S_j.
constexpr double kReducedCostTolerance = 1e-11;
constexpr int kMaxPivots = 200000;
constexpr double kOracleResidual = 1e-10;
constexpr double kOracleNegativity = 1e-12;

// Dense LU with partial pivoting for the k x k basis.
class BasisFactor {
 public:
  // `a` is row-major n x n.
  static absl::StatusOr<BasisFactor> Factor(std::vector<double> a, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    for (int c = 0; c < n; ++c) {
      int p = c;
      for (int r = c + 1; r < n; ++r) {
        if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
      }
      if (std::abs(a[p * n + c]) <= 1e-14 * scale) {
        return absl::InternalError("numerical breakdown: singular basis");
      }
      if (p != c) {
        for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
        std::swap(perm[p], perm[c]);
      }
      for (int r = c + 1; r < n; ++r) {
        const double m = a[r * n + c] / a[c * n + c];
        a[r * n + c] = m;
        for (int j = c + 1; j < n; ++j) a[r * n + j] -= m * a[c * n + j];
      }
    }
    return BasisFactor(std::move(a), std::move(perm), n);
  }

  // Solves A x = b.
  std::vector<double> Solve(const std::vector<double>& b) const {
    std::vector<double> x(n_);
    for (int i = 0; i < n_; ++i) {
      double s = b[perm_[i]];
      for (int j = 0; j < i; ++j) s -= lu_[i * n_ + j] * x[j];
      x[i] = s;
    }
    for (int i = n_ - 1; i >= 0; --i) {
      double s = x[i];
      for (int j = i + 1; j < n_; ++j) s -= lu_[i * n_ + j] * x[j];
      x[i] = s / lu_[i * n_ + i];
    }
    return x;
  }

  // Solves A' y = c.
  std::vector<double> SolveTransposed(const std::vector<double>& c) const {
    std::vector<double> z(n_);
    for (int i = 0; i < n_; ++i) {
      double s = c[i];
      for (int j = 0; j < i; ++j) s -= lu_[j * n_ + i] * z[j];
      z[i] = s / lu_[i * n_ + i];
    }
    for (int i = n_ - 1; i >= 0; --i) {
      double s = z[i];
      for (int j = i + 1; j < n_; ++j) s -= lu_[j * n_ + i] * z[j];
      z[i] = s;
    }
    std::vector<double> y(n_);
    for (int i = 0; i < n_; ++i) y[perm_[i]] = z[i];
    return y;
  }

 private:
  BasisFactor(std::vector<double> lu, std::vector<int> perm, int n)
      : lu_(std::move(lu)), perm_(std::move(perm)), n_(n) {}

  std::vector<double> lu_;
  std::vector<int> perm_;
  int n_;
};

LpSolution UnitMassOnColumn(const StaircaseLp& lp, int64_t column) {
  LpSolution sol;
  sol.status = LpStatus::kOptimal;
  sol.theta.assign(lp.objective.size(), 0.0);
  sol.theta[column] = 1.0;
  sol.value = lp.objective[column];
  sol.basis = {column};
  return sol;
}

}  // namespace

absl::StatusOr<StaircaseLp> BuildLp(const UtilitySpec& spec, double eps) {
  if (spec.k() > kMaxLpInputs) {
    return absl::OutOfRangeError("alphabet too large for the staircase LP: k=" +
                                 std::to_string(spec.k()) + " (max 12)");
  }
  absl::StatusOr<PatternMatrix> pattern = PatternMatrix::Create(spec.k(), eps);
  if (!pattern.ok()) return pattern.status();
  std::vector<double> objective(pattern->columns());
  for (int64_t j = 0; j < pattern->columns(); ++j) {
    objective[j] = ColumnUtility(spec, pattern->column(j));
  }
  if (const auto* ht = spec.hypothesis_testing()) {
    // Pattern columns realize likelihood ratios within [e^-eps, e^eps].
    absl::Status s =
        ht->divergence.CheckConvexOn(std::exp(-eps), std::exp(eps));
    if (!s.ok()) return s;
  }
  return StaircaseLp{spec.k(), eps, *std::move(pattern), std::move(objective)};
}

absl::StatusOr<LpSolution> Solve(const StaircaseLp& lp) {
  const int k = lp.k;
  const int64_t n = lp.pattern.columns();
  if (std::expm1(lp.eps) <= 0.0) {
    // Every pattern is the all-ones column.
    return UnitMassOnColumn(lp, 0);
  }

  std::vector<int64_t> basis(k);
  std::vector<char> in_basis(n, 0);
  for (int i = 0; i < k; ++i) {
    basis[i] = lp.pattern.SingletonColumn(i);
    in_basis[basis[i]] = 1;
  }
  const std::vector<double> ones(k, 1.0);

  for (int pivot = 0; pivot <= kMaxPivots; ++pivot) {
    std::vector<double> b(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
      for (int r = 0; r < k; ++r) b[i * k + r] = lp.pattern(i, basis[r]);
    }
    absl::StatusOr<BasisFactor> factor = BasisFactor::Factor(std::move(b), k);
    if (!factor.ok()) return factor.status();
    std::vector<double> x = factor->Solve(ones);
    std::vector<double> cost(k);
    for (int r = 0; r < k; ++r) cost[r] = lp.objective[basis[r]];
    const std::vector<double> y = factor->SolveTransposed(cost);

    // Bland: the lowest-index improving column enters.
    int64_t entering = -1;
    for (int64_t j = 0; j < n && entering < 0; ++j) {
      if (in_basis[j]) continue;
      const std::span<const double> col = lp.pattern.column(j);
      double dot = 0.0;
      double magnitude = std::abs(lp.objective[j]);
      for (int i = 0; i < k; ++i) {
        dot += y[i] * col[i];
        magnitude += std::abs(y[i]) * col[i];
      }
      if (lp.objective[j] - dot > kReducedCostTolerance * magnitude) {
        entering = j;
      }
    }

    if (entering < 0) {
      LpSolution sol;
      sol.status = LpStatus::kOptimal;
      sol.theta.assign(n, 0.0);
      sol.value = 0.0;
      for (int r = 0; r < k; ++r) {
        const double t = std::max(x[r], 0.0);
        sol.theta[basis[r]] = t;
        sol.value += lp.objective[basis[r]] * t;
      }
      sol.basis = basis;
      sol.pivots = pivot;
      return sol;
    }

    const std::span<const double> col = lp.pattern.column(entering);
    const std::vector<double> w =
        factor->Solve(std::vector<double>(col.begin(), col.end()));
    double wmax = 0.0;
    for (double v : w) wmax = std::max(wmax, std::abs(v));
    int leaving = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < k; ++r) {
      if (!(w[r] > kPivotTolerance * wmax)) continue;
      const double t = std::max(x[r], 0.0) / w[r];
      const double slack = 1e-12 * std::max(1.0, std::abs(best));
      if (leaving < 0 || t < best - slack ||
          (t <= best + slack && basis[r] < basis[leaving])) {
        if (leaving < 0 || t < best - slack) best = t;
        leaving = r;
      }
    }
    if (leaving < 0) {
      return absl::InternalError(
          "numerical breakdown: improving column " + std::to_string(entering) +
          " has no admissible pivot");
    }
    in_basis[basis[leaving]] = 0;
    basis[leaving] = entering;
    in_basis[entering] = 1;
  }
  return absl::InternalError("numerical breakdown: pivot budget exhausted");
}

absl::StatusOr<Mechanism> ExtractMechanism(const LpSolution& solution,
                                           const StaircaseLp& lp) {
  if (solution.status != LpStatus::kOptimal) {
    return absl::FailedPreconditionError("LP solution is not optimal");
  }
  std::vector<int64_t> kept;
  for (int64_t j = 0; j < static_cast<int64_t>(solution.theta.size()); ++j) {
    if (solution.theta[j] > kNonzeroThreshold) kept.push_back(j);
  }
  if (static_cast<int>(kept.size()) > lp.k) {
    return absl::FailedPreconditionError(
        "degenerate basis: " + std::to_string(kept.size()) +
        " columns above threshold for k=" + std::to_string(lp.k));
  }
  if (kept.empty()) {
    return absl::FailedPreconditionError("degenerate basis: empty solution");
  }
  std::vector<std::vector<double>> rows(lp.k,
                                        std::vector<double>(kept.size()));
  for (int x = 0; x < lp.k; ++x) {
    for (size_t c = 0; c < kept.size(); ++c) {
      rows[x][c] = solution.theta[kept[c]] * lp.pattern(x, kept[c]);
    }
  }
  return Mechanism::FromRows(rows);
}

absl::StatusOr<double> VertexOracle(const StaircaseLp& lp) {
  const int k = lp.k;
  if (k > kMaxOracleInputs) {
    return absl::OutOfRangeError("vertex oracle is limited to k <= 4");
  }
  const int n = static_cast<int>(lp.pattern.columns());
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> chosen;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(k);

  auto evaluate = [&]() {
    const int m = static_cast<int>(chosen.size());
    Eigen::MatrixXd a(k, m);
    for (int c = 0; c < m; ++c) {
      for (int i = 0; i < k; ++i) a(i, c) = lp.pattern(i, chosen[c]);
    }
    const Eigen::VectorXd theta = a.completeOrthogonalDecomposition().solve(ones);
    if ((a * theta - ones).lpNorm<Eigen::Infinity>() > kOracleResidual) return;
    if (theta.minCoeff() < -kOracleNegativity) return;
    double value = 0.0;
    for (int c = 0; c < m; ++c) value += lp.objective[chosen[c]] * theta(c);
    best = std::max(best, value);
  };

  // Depth-first over increasing index tuples of size 1..k.
  auto recurse = [&](auto&& self, int start) -> void {
    for (int j = start; j < n; ++j) {
      chosen.push_back(j);
      evaluate();
      if (static_cast<int>(chosen.size()) < k) self(self, j + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

absl::StatusOr<OptimalMechanism> SolveOptimal(const UtilitySpec& spec,
                                              double eps) {
  absl::StatusOr<StaircaseLp> lp = BuildLp(spec, eps);
  if (!lp.ok()) return lp.status();
  absl::StatusOr<LpSolution> sol = Solve(*lp);
  if (!sol.ok()) return sol.status();
  absl::StatusOr<Mechanism> q = ExtractMechanism(*sol, *lp);
  if (!q.ok()) return q.status();
  return OptimalMechanism{sol->value, *std::move(q), *std::move(sol)};
}

}  // namespace staircase
