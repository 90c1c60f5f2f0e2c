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

#include "hsaflow/hsa/topology.h"

#include <fstream>
#include <set>
#include <sstream>

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/common/status_macros.h"
#include "json.hpp"

namespace hsaflow::hsa {
namespace {

using nlohmann::json;

absl::Status TopologyError(std::string_view detail) {
  return errors::ConfigError(hsaflow::StrCat("topology: ", detail));
}

absl::StatusOr<fpga::ResourceVector> ParseResources(
    const json& obj, const fpga::ResourceVector& fallback) {
  if (!obj.is_object()) return TopologyError("resources must be an object");
  fpga::ResourceVector r = fallback;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_number_integer()) {
      return TopologyError(hsaflow::StrCat("'", key, "' must be an integer"));
    }
    const int64_t v = value.get<int64_t>();
    if (key == "lut") {
      r.lut = v;
    } else if (key == "ff") {
      r.ff = v;
    } else if (key == "bram") {
      r.bram = v;
    } else if (key == "dsp") {
      r.dsp = v;
    } else {
      return TopologyError(hsaflow::StrCat("unknown resource '", key, "'"));
    }
  }
  return r;
}

absl::StatusOr<uint64_t> Micros(const json& v, std::string_view key) {
  if (!v.is_number_integer() || v.get<int64_t>() < 0) {
    return TopologyError(
        hsaflow::StrCat("'", key, "' must be a non-negative integer"));
  }
  return v.get<uint64_t>();
}

absl::Status ParseCosts(const json& obj, metrics::CostConstants& costs) {
  if (!obj.is_object()) return TopologyError("'costs' must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (key == "setup_us") {
      if (value.is_object()) {
        if (value.contains("tf")) {
          HSAFLOW_ASSIGN_OR_RETURN(costs.setup_us_tf,
                                   Micros(value.at("tf"), "setup_us.tf"));
        }
        if (value.contains("hsa")) {
          HSAFLOW_ASSIGN_OR_RETURN(costs.setup_us_hsa,
                                   Micros(value.at("hsa"), "setup_us.hsa"));
        }
      } else {
        HSAFLOW_ASSIGN_OR_RETURN(costs.setup_us_tf, Micros(value, key));
        costs.setup_us_hsa = costs.setup_us_tf;
      }
    } else if (key == "setup_us_tf") {
      HSAFLOW_ASSIGN_OR_RETURN(costs.setup_us_tf, Micros(value, key));
    } else if (key == "setup_us_hsa") {
      HSAFLOW_ASSIGN_OR_RETURN(costs.setup_us_hsa, Micros(value, key));
    } else if (key == "reconfig_us") {
      HSAFLOW_ASSIGN_OR_RETURN(costs.reconfig_us, Micros(value, key));
    } else if (key == "dispatch_us_tf") {
      HSAFLOW_ASSIGN_OR_RETURN(costs.dispatch_us_tf, Micros(value, key));
    } else if (key == "dispatch_us_hsa") {
      HSAFLOW_ASSIGN_OR_RETURN(costs.dispatch_us_hsa, Micros(value, key));
    } else {
      return TopologyError(hsaflow::StrCat("unknown cost constant '", key, "'"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<AgentSpec> ParseAgent(const json& entry) {
  if (!entry.is_object()) return TopologyError("agent entries must be objects");
  AgentSpec spec;
  if (!entry.contains("id") || !entry.at("id").is_string()) {
    return TopologyError("agent without string 'id'");
  }
  spec.id = entry.at("id").get<std::string>();
  const auto kind = ParseAgentKind(entry.value("kind", ""));
  if (!kind) {
    return TopologyError(
        hsaflow::StrCat("agent '", spec.id, "': kind must be \"cpu\" or \"fpga\""));
  }
  spec.kind = *kind;
  spec.name = entry.value("name", spec.id);
  if (spec.kind == AgentKind::kFpga) {
    spec.capacity = fpga::kDefaultCapacity;
    spec.shell = fpga::kDefaultShell;
    spec.regions = 2;
  }
  if (entry.contains("capacity")) {
    HSAFLOW_ASSIGN_OR_RETURN(spec.capacity,
                             ParseResources(entry.at("capacity"), spec.capacity));
  }
  if (entry.contains("shell")) {
    HSAFLOW_ASSIGN_OR_RETURN(spec.shell,
                             ParseResources(entry.at("shell"), spec.shell));
  }
  if (entry.contains("regions")) {
    if (!entry.at("regions").is_number_integer()) {
      return TopologyError("'regions' must be an integer");
    }
    spec.regions = entry.at("regions").get<int>();
  }
  if (entry.contains("preloaded")) {
    for (const json& role : entry.at("preloaded")) {
      spec.preloaded.push_back(role.get<std::string>());
    }
  }
  return spec;
}

}  // namespace

TopologyConfig DefaultTopology() {
  TopologyConfig config;
  AgentSpec cpu;
  cpu.id = "cpu0";
  cpu.kind = AgentKind::kCpu;
  cpu.name = "Cortex-A53 host";
  config.agents.push_back(cpu);
  AgentSpec accel;
  accel.id = "fpga0";
  accel.kind = AgentKind::kFpga;
  accel.name = "ZU3EG programmable logic";
  accel.capacity = fpga::kDefaultCapacity;
  accel.shell = fpga::kDefaultShell;
  accel.regions = 2;
  config.agents.push_back(accel);
  return config;
}

absl::Status ValidateTopology(const TopologyConfig& config) {
  std::set<std::string> ids;
  for (const AgentSpec& agent : config.agents) {
    if (agent.id.empty()) return TopologyError("agent with empty id");
    if (!ids.insert(agent.id).second) {
      return TopologyError(hsaflow::StrCat("duplicate agent id '", agent.id, "'"));
    }
    if (agent.kind == AgentKind::kCpu) {
      if (!agent.capacity.IsZero() || !agent.shell.IsZero() ||
          agent.regions != 0 || !agent.preloaded.empty()) {
        return TopologyError(hsaflow::StrCat(
            "cpu agent '", agent.id, "' cannot have FPGA resources"));
      }
      continue;
    }
    if (agent.regions < 1) {
      return TopologyError(hsaflow::StrCat("fpga agent '", agent.id,
                                        "' needs regions >= 1, got ",
                                        agent.regions));
    }
    if (!agent.capacity.NonNegative() || !agent.shell.NonNegative()) {
      return TopologyError(
          hsaflow::StrCat("fpga agent '", agent.id, "' has negative resources"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<TopologyConfig> ParseTopology(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    return errors::ParseError(
        hsaflow::StrCat("topology at byte ", e.byte, ": ", e.what()));
  }
  if (!doc.is_object()) return TopologyError("expected a JSON object");
  TopologyConfig config;
  try {
    if (!doc.contains("agents") || !doc.at("agents").is_array()) {
      return TopologyError("missing 'agents' array");
    }
    for (const json& entry : doc.at("agents")) {
      HSAFLOW_ASSIGN_OR_RETURN(AgentSpec spec, ParseAgent(entry));
      config.agents.push_back(std::move(spec));
    }
    if (doc.contains("costs")) {
      HSAFLOW_RETURN_IF_ERROR(ParseCosts(doc.at("costs"), config.costs));
    }
    if (doc.contains("layer")) {
      const auto layer = metrics::ParseLayer(doc.at("layer").get<std::string>());
      if (!layer) return TopologyError("layer must be \"tf\" or \"hsa\"");
      config.costs.layer = *layer;
    }
    if (doc.contains("queue_policy")) {
      const std::string policy = doc.at("queue_policy").get<std::string>();
      if (policy == "block") {
        config.queue_policy = QueuePolicy::kBlock;
      } else if (policy == "error") {
        config.queue_policy = QueuePolicy::kError;
      } else {
        return TopologyError("queue_policy must be \"block\" or \"error\"");
      }
    }
  } catch (const json::exception& e) {
    return TopologyError(e.what());
  }
  HSAFLOW_RETURN_IF_ERROR(ValidateTopology(config));
  return config;
}

absl::StatusOr<TopologyConfig> LoadTopology(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(hsaflow::StrCat("file not found: ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTopology(buffer.str());
}

}  // namespace hsaflow::hsa
