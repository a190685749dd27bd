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

#ifndef STAIRCASE_PATTERN_MATRIX_H_
#define STAIRCASE_PATTERN_MATRIX_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace staircase {

// The k x 2^k matrix whose columns are every {1, e^eps}-valued pattern.
// Column j (0-based) is (e^eps - 1) * bits(j) + 1 with row k-1 holding the
// least-significant bit, so column 0 is all ones and column 2^k - 1 is all
// e^eps. Stored column-major.
class PatternMatrix {
 public:
  static constexpr int kMaxInputs = 16;

  // OutOfRange unless 2 <= k <= kMaxInputs; InvalidArgument for eps < 0.
  static absl::StatusOr<PatternMatrix> Create(int k, double eps);

  int rows() const { return k_; }
  int64_t columns() const { return int64_t{1} << k_; }
  double eps() const { return eps_; }

  // True when entry (row, col) is e^eps rather than 1.
  bool IsHigh(int row, int64_t col) const {
    return ((col >> (k_ - 1 - row)) & 1) != 0;
  }
  double operator()(int row, int64_t col) const {
    return data_[col * k_ + row];
  }
  std::span<const double> column(int64_t col) const {
    return std::span<const double>(data_).subspan(col * k_, k_);
  }

  // Index of the column whose only e^eps entry sits on `row`.
  int64_t SingletonColumn(int row) const { return int64_t{1} << (k_ - 1 - row); }

 private:
  PatternMatrix(int k, double eps, std::vector<double> data)
      : k_(k), eps_(eps), data_(std::move(data)) {}

  int k_;
  double eps_;
  std::vector<double> data_;
};

}  // namespace staircase

#endif  // STAIRCASE_PATTERN_MATRIX_H_
