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

#include "staircase/mechanism_json.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace staircase {
namespace {

using Json = nlohmann::json;

std::string Position(std::string_view text, size_t byte) {
  int line = 1;
  int column = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

absl::StatusOr<std::optional<double>> OptionalNumber(const Json& obj,
                                                     const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::optional<double>();
  if (!it->is_number()) {
    return absl::InvalidArgumentError(std::string("'") + key +
                                      "' must be a number or null");
  }
  return std::optional<double>(it->get<double>());
}

absl::StatusOr<int> RequiredCount(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    return absl::InvalidArgumentError(std::string("'") + key +
                                      "' must be an integer");
  }
  return it->get<int>();
}

}  // namespace

std::string MechanismToJson(const MechanismDocument& doc) {
  Json out = Json::object();
  out["k"] = doc.mechanism.inputs();
  out["l"] = doc.mechanism.outputs();
  out["rows"] = doc.mechanism.rows();
  out["eps_claimed"] =
      doc.eps_claimed.has_value() ? Json(*doc.eps_claimed) : Json(nullptr);
  out["delta_claimed"] =
      doc.delta_claimed.has_value() ? Json(*doc.delta_claimed) : Json(nullptr);
  return out.dump(2) + "\n";
}

absl::StatusOr<MechanismDocument> MechanismFromJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    return absl::InvalidArgumentError("JSON parse error at " +
                                      Position(text, byte));
  }
  if (!doc.is_object()) {
    return absl::InvalidArgumentError("mechanism JSON must be an object");
  }
  absl::StatusOr<int> k = RequiredCount(doc, "k");
  if (!k.ok()) return k.status();
  absl::StatusOr<int> l = RequiredCount(doc, "l");
  if (!l.ok()) return l.status();
  auto rows_it = doc.find("rows");
  if (rows_it == doc.end() || !rows_it->is_array()) {
    return absl::InvalidArgumentError("'rows' must be an array");
  }
  std::vector<std::vector<double>> rows;
  for (const Json& row : *rows_it) {
    if (!row.is_array()) {
      return absl::InvalidArgumentError("each row must be an array");
    }
    std::vector<double> values;
    for (const Json& v : row) {
      if (!v.is_number()) {
        return absl::InvalidArgumentError("row entries must be numbers");
      }
      values.push_back(v.get<double>());
    }
    rows.push_back(std::move(values));
  }
  if (static_cast<int>(rows.size()) != *k) {
    return absl::InvalidArgumentError("dimension mismatch: 'k' is " +
                                      std::to_string(*k) + " but " +
                                      std::to_string(rows.size()) +
                                      " rows given");
  }
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != *l) {
      return absl::InvalidArgumentError("dimension mismatch: 'l' is " +
                                        std::to_string(*l) +
                                        " but a row has " +
                                        std::to_string(row.size()) +
                                        " entries");
    }
  }
  absl::StatusOr<Mechanism> q = Mechanism::FromRows(rows);
  if (!q.ok()) return q.status();
  absl::StatusOr<std::optional<double>> eps = OptionalNumber(doc, "eps_claimed");
  if (!eps.ok()) return eps.status();
  absl::StatusOr<std::optional<double>> delta =
      OptionalNumber(doc, "delta_claimed");
  if (!delta.ok()) return delta.status();
  return MechanismDocument{*std::move(q), *eps, *delta};
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return absl::NotFoundError("cannot read '" + path + "'");
  return buf.str();
}

absl::Status WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError("cannot open '" + path + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) return absl::UnavailableError("cannot write '" + path + "'");
  return absl::OkStatus();
}

absl::StatusOr<MechanismDocument> ReadMechanismFile(const std::string& path) {
  absl::StatusOr<std::string> text = ReadTextFile(path);
  if (!text.ok()) return text.status();
  return MechanismFromJson(*text);
}

absl::Status WriteMechanismFile(const std::string& path,
                                const MechanismDocument& doc) {
  return WriteTextFile(path, MechanismToJson(doc));
}

bool IsIoError(const absl::Status& status) {
  return absl::IsNotFound(status) || absl::IsUnavailable(status);
}

}  // namespace staircase
