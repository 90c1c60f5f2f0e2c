/* Copyright 2026 The hsaflow Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <fstream>
#include <sstream>

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/metrics/efficiency.h"
#include "json.hpp"

namespace hsaflow::metrics {

Calibration DefaultCalibration() {
  Calibration c;
  // role rate x increase: 16 x 6.51, 32 x 3.03, 1 x 18.62, 1 x 6.98.
  c.cpu_cycles_per_element[OpType::kFcF32] = Rational(10416, 100);
  c.cpu_cycles_per_element[OpType::kFcF32Barrier] = Rational(9696, 100);
  c.cpu_cycles_per_element[OpType::kConv5x5I16] = Rational(1862, 100);
  c.cpu_cycles_per_element[OpType::kConv3x3x2I16] = Rational(698, 100);
  return c;
}

absl::StatusOr<Calibration> ParseCalibration(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    return errors::ParseError(
        hsaflow::StrCat("calibration at byte ", e.byte, ": ", e.what()));
  }
  if (!doc.is_object() || !doc.contains("cpu_cycles_per_element") ||
      !doc.at("cpu_cycles_per_element").is_object()) {
    return errors::ConfigError(
        "calibration: expected an object with 'cpu_cycles_per_element'");
  }
  Calibration c;
  for (const auto& [name, value] : doc.at("cpu_cycles_per_element").items()) {
    auto op = ParseOpType(name);
    if (!op || *op == OpType::kCustom) {
      return errors::ConfigError(
          hsaflow::StrCat("calibration: unknown op_type '", name, "'"));
    }
    absl::StatusOr<Rational> rate;
    if (value.is_string()) {
      rate = Rational::Parse(value.get<std::string>());
    } else if (value.is_number_integer()) {
      rate = Rational(value.get<int64_t>());
    } else if (value.is_number()) {
      rate = Rational::Parse(value.dump());
    } else {
      return errors::ConfigError(
          hsaflow::StrCat("calibration: '", name, "' must be a number or string"));
    }
    if (!rate.ok()) return rate.status();
    if (*rate < Rational(0)) {
      return errors::ConfigError(
          hsaflow::StrCat("calibration: '", name, "' is negative"));
    }
    c.cpu_cycles_per_element[*op] = *rate;
  }
  return c;
}

absl::StatusOr<Calibration> LoadCalibration(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(hsaflow::StrCat("file not found: ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseCalibration(buffer.str());
}

}  // namespace hsaflow::metrics
