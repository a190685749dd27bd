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

#include "staircase/mechanism.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "absl/status/status.h"

namespace staircase {

absl::StatusOr<Mechanism> Mechanism::FromRows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    return absl::InvalidArgumentError("mechanism needs at least one row and "
                                      "one column");
  }
  const int k = static_cast<int>(rows.size());
  const int l = static_cast<int>(rows.front().size());
  std::vector<double> data;
  data.reserve(static_cast<size_t>(k) * l);
  for (int x = 0; x < k; ++x) {
    if (static_cast<int>(rows[x].size()) != l) {
      return absl::InvalidArgumentError(
          "row " + std::to_string(x) + " has " +
          std::to_string(rows[x].size()) + " entries, expected " +
          std::to_string(l));
    }
    double sum = 0.0;
    for (int y = 0; y < l; ++y) {
      const double v = rows[x][y];
      if (!std::isfinite(v) || v < 0.0) {
        return absl::InvalidArgumentError(
            "row " + std::to_string(x) + ", column " + std::to_string(y) +
            ": entry must be finite and nonnegative");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumGate) {
      return absl::InvalidArgumentError("row " + std::to_string(x) +
                                        " sums to " + std::to_string(sum) +
                                        ", not 1");
    }
    for (int y = 0; y < l; ++y) data.push_back(rows[x][y] / sum);
  }
  return Mechanism(k, l, std::move(data));
}

std::vector<double> Mechanism::column(int y) const {
  std::vector<double> col(inputs_);
  for (int x = 0; x < inputs_; ++x) col[x] = (*this)(x, y);
  return col;
}

std::vector<std::vector<double>> Mechanism::rows() const {
  std::vector<std::vector<double>> out(inputs_);
  for (int x = 0; x < inputs_; ++x) {
    out[x].assign(row(x).begin(), row(x).end());
  }
  return out;
}

absl::StatusOr<Mechanism> Mechanism::Then(const Mechanism& w) const {
  if (w.inputs() != outputs_) {
    return absl::InvalidArgumentError(
        "dimension mismatch: cannot post-process " + std::to_string(outputs_) +
        " outputs with a channel on " + std::to_string(w.inputs()) +
        " inputs");
  }
  std::vector<std::vector<double>> out(
      inputs_, std::vector<double>(w.outputs(), 0.0));
  for (int x = 0; x < inputs_; ++x) {
    for (int y = 0; y < outputs_; ++y) {
      const double q = (*this)(x, y);
      if (q == 0.0) continue;
      for (int z = 0; z < w.outputs(); ++z) out[x][z] += q * w(y, z);
    }
  }
  return FromRows(out);
}

absl::StatusOr<Mechanism> Mechanism::RestrictOutputs(
    std::span<const int> outputs) const {
  std::vector<std::vector<double>> out(inputs_);
  for (int x = 0; x < inputs_; ++x) {
    double sum = 0.0;
    for (int y : outputs) {
      if (y < 0 || y >= outputs_) {
        return absl::InvalidArgumentError("output index out of range");
      }
      sum += (*this)(x, y);
    }
    if (!(sum > 0.0)) {
      return absl::InvalidArgumentError("row " + std::to_string(x) +
                                        " has no mass on the kept outputs");
    }
    for (int y : outputs) out[x].push_back((*this)(x, y) / sum);
  }
  return FromRows(out);
}

Mechanism IdentityMechanism(int k) {
  std::vector<std::vector<double>> rows(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) rows[i][i] = 1.0;
  return *Mechanism::FromRows(rows);
}

absl::StatusOr<Mechanism> ConstantMechanism(int k, std::vector<double> row) {
  if (k < 1) return absl::InvalidArgumentError("k must be positive");
  return Mechanism::FromRows(std::vector<std::vector<double>>(k, row));
}

absl::StatusOr<Distribution> InducedMarginal(const Distribution& p,
                                             const Mechanism& q) {
  if (p.size() != q.inputs()) {
    return absl::InvalidArgumentError(
        "dimension mismatch: prior has " + std::to_string(p.size()) +
        " symbols, mechanism has " + std::to_string(q.inputs()) + " inputs");
  }
  if (q.outputs() < 2) {
    // A one-output mechanism induces the point mass; Distribution needs two
    // symbols, so pad with an empty output.
    return Distribution::Normalize({1.0, 0.0});
  }
  std::vector<double> m(q.outputs(), 0.0);
  for (int x = 0; x < q.inputs(); ++x) {
    for (int y = 0; y < q.outputs(); ++y) m[y] += p[x] * q(x, y);
  }
  return Distribution::Normalize(std::move(m));
}

double MaxAbsDifference(const Mechanism& a, const Mechanism& b,
                        bool up_to_column_order) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) {
    return std::numeric_limits<double>::infinity();
  }
  auto diff = [&](const std::vector<int>& perm) {
    double worst = 0.0;
    for (int x = 0; x < a.inputs(); ++x) {
      for (int y = 0; y < a.outputs(); ++y) {
        worst = std::max(worst, std::abs(a(x, y) - b(x, perm[y])));
      }
    }
    return worst;
  };
  std::vector<int> perm(a.outputs());
  std::iota(perm.begin(), perm.end(), 0);
  if (!up_to_column_order || a.outputs() > 8) return diff(perm);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, diff(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace staircase
