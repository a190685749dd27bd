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

#include "staircase/pattern_matrix.h"

#include <cmath>
#include <string>

#include "absl/status/status.h"

namespace staircase {

absl::StatusOr<PatternMatrix> PatternMatrix::Create(int k, double eps) {
  if (k < 2 || k > kMaxInputs) {
    return absl::OutOfRangeError("alphabet too large for a pattern matrix: k=" +
                                 std::to_string(k) + " (need 2..16)");
  }
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    return absl::InvalidArgumentError("eps must be finite and >= 0");
  }
  const double high = std::exp(eps);
  const int64_t n = int64_t{1} << k;
  std::vector<double> data(static_cast<size_t>(n) * k);
  for (int64_t j = 0; j < n; ++j) {
    for (int i = 0; i < k; ++i) {
      data[j * k + i] = ((j >> (k - 1 - i)) & 1) ? high : 1.0;
    }
  }
  return PatternMatrix(k, eps, std::move(data));
}

}  // namespace staircase
