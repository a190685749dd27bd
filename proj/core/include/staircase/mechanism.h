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

#ifndef STAIRCASE_MECHANISM_H_
#define STAIRCASE_MECHANISM_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "staircase/distribution.h"

namespace staircase {

// A k x l row-stochastic matrix Q with Q(x, y) = Q(y | x). Entries are
// nonnegative and each row sums to one within 1e-12.
class Mechanism {
 public:
  // Row sums within this distance of one are renormalized; anything further
  // away is rejected.
  static constexpr double kRowSumGate = 1e-9;

  // Builds a mechanism from input rows. Fails with InvalidArgument on ragged
  // or empty rows, negative or non-finite entries, or a row whose sum misses
  // one by more than kRowSumGate. The error message names the offending row.
  static absl::StatusOr<Mechanism> FromRows(
      const std::vector<std::vector<double>>& rows);

  int inputs() const { return inputs_; }
  int outputs() const { return outputs_; }

  double operator()(int x, int y) const { return data_[x * outputs_ + y]; }
  std::span<const double> row(int x) const {
    return std::span<const double>(data_).subspan(x * outputs_, outputs_);
  }
  std::vector<double> column(int y) const;
  std::vector<std::vector<double>> rows() const;

  // Q * W for a row-stochastic W with W.inputs() == outputs().
  absl::StatusOr<Mechanism> Then(const Mechanism& w) const;

  // Keeps only the listed outputs, in order, renormalizing each row.
  absl::StatusOr<Mechanism> RestrictOutputs(std::span<const int> outputs) const;

  bool operator==(const Mechanism&) const = default;

 private:
  Mechanism(int inputs, int outputs, std::vector<double> data)
      : inputs_(inputs), outputs_(outputs), data_(std::move(data)) {}

  int inputs_ = 0;
  int outputs_ = 0;
  std::vector<double> data_;
};

// k x k identity channel.
Mechanism IdentityMechanism(int k);

// Every row equal to `row` (output independent of input).
absl::StatusOr<Mechanism> ConstantMechanism(int k, std::vector<double> row);

// M(y) = sum_x P(x) Q(y|x). InvalidArgument when P.size() != Q.inputs().
absl::StatusOr<Distribution> InducedMarginal(const Distribution& p,
                                             const Mechanism& q);

// Largest |entrywise difference| between two equally shaped mechanisms,
// minimized over column permutations of `b` when `up_to_column_order`.
double MaxAbsDifference(const Mechanism& a, const Mechanism& b,
                        bool up_to_column_order);

}  // namespace staircase

#endif  // STAIRCASE_MECHANISM_H_
