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

#ifndef STAIRCASE_SWEEP_H_
#define STAIRCASE_SWEEP_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace staircase {

enum class SweepUtility { kKl, kTv, kChiSquared, kMi };
enum class SweepMechanism { kBinary, kGeometric, kMixed, kOptimal, kRr };

absl::StatusOr<SweepUtility> ParseSweepUtility(std::string_view name);
absl::StatusOr<SweepMechanism> ParseSweepMechanism(std::string_view name);
std::string_view SweepMechanismName(SweepMechanism m);

std::vector<double> DefaultEpsGrid();

struct SweepConfig {
  uint64_t seed = 42;
  int k = 6;
  int num_instances = 100;
  std::vector<double> eps_grid = DefaultEpsGrid();
  SweepUtility utility = SweepUtility::kKl;
  std::vector<SweepMechanism> mechanisms = {
      SweepMechanism::kBinary, SweepMechanism::kGeometric,
      SweepMechanism::kMixed, SweepMechanism::kOptimal, SweepMechanism::kRr};
  std::string out_path;
  int threads = 0;  // 0: hardware concurrency.
};

absl::Status ValidateSweepConfig(const SweepConfig& cfg);

// Missing keys keep their defaults.
absl::StatusOr<SweepConfig> SweepConfigFromJson(std::string_view text);

struct SweepRow {
  int instance_id = 0;
  double eps = 0.0;
  SweepMechanism mechanism = SweepMechanism::kBinary;
  double utility_value = 0.0;
  double opt_value = 0.0;  // NaN when the LP is out of reach (k > 12).
  double ratio = 0.0;      // utility / opt; 1 when opt is 0.
};

struct EpsSummary {
  double eps = 0.0;
  std::vector<double> mean_ratio;  // Parallel to SweepConfig::mechanisms.
};

struct SweepSummary {
  std::vector<SweepMechanism> mechanisms;
  std::vector<EpsSummary> per_eps;
  double min_mixed_ratio = 1.0;
  double max_solve_seconds = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // Sorted by (instance_id, eps, mechanism).
  SweepSummary summary;
};

// Deterministic for a fixed config, independent of the thread count.
absl::StatusOr<SweepResult> RunSweep(const SweepConfig& cfg);

std::string FormatSweepCsv(const std::vector<SweepRow>& rows);
std::string FormatSweepSummary(const SweepSummary& summary);

}  // namespace staircase

#endif  // STAIRCASE_SWEEP_H_
