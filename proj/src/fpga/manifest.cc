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

#include "hsaflow/fpga/manifest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/common/status_macros.h"
#include "json.hpp"

namespace hsaflow::fpga {
namespace {

using nlohmann::json;

absl::Status ManifestError(std::string_view detail) {
  return errors::ConfigError(hsaflow::StrCat("role manifest: ", detail));
}

absl::StatusOr<int64_t> Count(const json& obj, const char* key) {
  if (!obj.contains(key)) return int64_t{0};
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<int64_t>() < 0) {
    return ManifestError(hsaflow::StrCat("'", key, "' must be a non-negative integer"));
  }
  return v.get<int64_t>();
}

absl::StatusOr<Rational> ParseRate(const json& v) {
  if (v.is_string()) return Rational::Parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<int64_t>());
  if (v.is_number()) return Rational::Parse(v.dump());
  return ManifestError("cycles_per_element must be a string or number");
}

absl::StatusOr<kernels::FixedWeights> ParseWeights(OpType op, const json& w) {
  if (!w.is_object()) return ManifestError("'weights' must be an object");
  kernels::FixedWeights weights;
  weights.scale_shift = w.value("scale_shift", 0);
  if (w.contains("values")) {
    std::vector<int16_t> values;
    for (const json& v : w.at("values")) {
      if (!v.is_number_integer() || v.get<int64_t>() < -32768 ||
          v.get<int64_t>() > 32767) {
        return ManifestError("weight values must be i16 integers");
      }
      values.push_back(static_cast<int16_t>(v.get<int64_t>()));
    }
    HSAFLOW_ASSIGN_OR_RETURN(
        weights.values,
        Tensor::I16(kernels::ExpectedWeightShape(op), std::move(values)));
  } else if (w.contains("seed")) {
    weights = kernels::DefaultFixedWeights(op, w.at("seed").get<uint32_t>(),
                                           weights.scale_shift);
  } else {
    return ManifestError("'weights' needs 'seed' or 'values'");
  }
  HSAFLOW_RETURN_IF_ERROR(kernels::ValidateFixedWeights(op, weights));
  return weights;
}

absl::StatusOr<Role> ParseRole(const json& entry) {
  if (!entry.is_object()) return ManifestError("role entries must be objects");
  Role role;
  if (!entry.contains("role_id") || !entry.at("role_id").is_string()) {
    return ManifestError("role entry without string 'role_id'");
  }
  role.id = entry.at("role_id").get<std::string>();
  const std::string op_name = entry.value("op_type", "");
  if (op_name.starts_with("custom:")) {
    role.op_type = OpType::kCustom;
    role.custom_name = op_name.substr(7);
  } else if (auto op = ParseOpType(op_name); op && *op != OpType::kCustom) {
    role.op_type = *op;
  } else {
    return ManifestError(
        hsaflow::StrCat("role '", role.id, "': unknown op_type '", op_name, "'"));
  }
  const json footprint = entry.value("footprint", json::object());
  HSAFLOW_ASSIGN_OR_RETURN(role.footprint.lut, Count(footprint, "lut"));
  HSAFLOW_ASSIGN_OR_RETURN(role.footprint.ff, Count(footprint, "ff"));
  HSAFLOW_ASSIGN_OR_RETURN(role.footprint.bram, Count(footprint, "bram"));
  HSAFLOW_ASSIGN_OR_RETURN(role.footprint.dsp, Count(footprint, "dsp"));
  if (!entry.contains("cycles_per_element")) {
    return ManifestError(
        hsaflow::StrCat("role '", role.id, "' lacks cycles_per_element"));
  }
  HSAFLOW_ASSIGN_OR_RETURN(role.cycles_per_element,
                           ParseRate(entry.at("cycles_per_element")));
  if (role.cycles_per_element < Rational(0)) {
    return ManifestError(
        hsaflow::StrCat("role '", role.id, "' has negative cycles_per_element"));
  }
  role.description = entry.value("description", "");
  if (IsConv(role.op_type)) {
    if (!entry.contains("weights")) {
      return ManifestError(
          hsaflow::StrCat("conv role '", role.id, "' lacks fixed weights"));
    }
    HSAFLOW_ASSIGN_OR_RETURN(role.weights,
                             ParseWeights(role.op_type, entry.at("weights")));
  }
  return role;
}

}  // namespace

absl::StatusOr<Manifest> ParseManifest(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    return errors::ParseError(
        hsaflow::StrCat("role manifest at byte ", e.byte, ": ", e.what()));
  }
  if (!doc.is_object() || !doc.contains("roles") || !doc.at("roles").is_array()) {
    return ManifestError("expected an object with a 'roles' array");
  }
  Manifest manifest;
  std::set<std::string> ids;
  std::set<std::pair<OpType, std::string>> op_keys;
  try {
    for (const json& entry : doc.at("roles")) {
      HSAFLOW_ASSIGN_OR_RETURN(Role role, ParseRole(entry));
      if (!ids.insert(role.id).second) {
        return ManifestError(hsaflow::StrCat("duplicate role_id '", role.id, "'"));
      }
      if (!op_keys.insert({role.op_type, role.custom_name}).second) {
        return ManifestError(hsaflow::StrCat("role '", role.id,
                                          "' repeats an op_type already "
                                          "provided by another role"));
      }
      if (role.weights) manifest.fixed_weights[role.op_type] = *role.weights;
      manifest.roles.push_back(std::move(role));
    }
  } catch (const json::exception& e) {
    return ManifestError(e.what());
  }
  return manifest;
}

absl::StatusOr<Manifest> LoadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(hsaflow::StrCat("file not found: ", path));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseManifest(buffer.str());
}

Manifest DefaultManifest() {
  Manifest manifest;
  auto add = [&](std::string id, OpType op, ResourceVector footprint,
                 Rational rate, std::string description, uint32_t seed) {
    Role role;
    role.id = std::move(id);
    role.op_type = op;
    role.footprint = footprint;
    role.cycles_per_element = rate;
    role.description = std::move(description);
    if (IsConv(op)) {
      role.weights = kernels::DefaultFixedWeights(op, seed, 6);
      manifest.fixed_weights[op] = *role.weights;
    }
    manifest.roles.push_back(std::move(role));
  };
  add("role1", OpType::kFcF32, {9984, 8479, 21, 22}, Rational(16),
      "Fully connected (float32)", 0);
  add("role2", OpType::kFcF32Barrier, {9501, 7851, 23, 8}, Rational(32),
      "Fully connected with barrier (float32)", 0);
  add("role3", OpType::kConv5x5I16, {5091, 4935, 21, 6}, Rational(1),
      "Conv 5x5, 1 filter, fixed weights (int16)", 3);
  add("role4", OpType::kConv3x3x2I16, {7881, 7926, 21, 12}, Rational(1),
      "Conv 3x3, 2 filters, fixed weights (int16)", 4);
  return manifest;
}

}  // namespace hsaflow::fpga
