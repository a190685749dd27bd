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

#ifndef STAIRCASE_MECHANISM_JSON_H_
#define STAIRCASE_MECHANISM_JSON_H_

#include <optional>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "staircase/mechanism.h"

namespace staircase {

// On-disk form of a mechanism:
//   {"k": int, "l": int, "rows": [[...], ...], "eps_claimed": real|null,
//    "delta_claimed": real|null}
struct MechanismDocument {
  Mechanism mechanism;
  std::optional<double> eps_claimed;
  std::optional<double> delta_claimed;
};

// Doubles are written with round-trip precision.
std::string MechanismToJson(const MechanismDocument& doc);

// Syntax errors carry "line L, column C". Rows go through the same
// normalization gate as Mechanism::FromRows.
absl::StatusOr<MechanismDocument> MechanismFromJson(std::string_view text);

// I/O failures map to NotFound (read) and Unavailable (write).
absl::StatusOr<std::string> ReadTextFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, std::string_view text);

absl::StatusOr<MechanismDocument> ReadMechanismFile(const std::string& path);
absl::Status WriteMechanismFile(const std::string& path,
                                const MechanismDocument& doc);

// True for the status codes produced by the file helpers above.
bool IsIoError(const absl::Status& status);

}  // namespace staircase

#endif  // STAIRCASE_MECHANISM_JSON_H_
