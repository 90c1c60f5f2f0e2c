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

#include "hsaflow/graph/placement.h"

#include <algorithm>

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"

namespace hsaflow::graph {

int Placement::fallback_count() const {
  return std::count_if(nodes.begin(), nodes.end(),
                       [](const auto& kv) { return kv.second.fallback; });
}

int Placement::fpga_count() const {
  return std::count_if(nodes.begin(), nodes.end(), [](const auto& kv) {
    return kv.second.kind == hsa::AgentKind::kFpga;
  });
}

absl::StatusOr<Placement> Place(const Graph& graph,
                                const hsa::KernelRegistry& registry,
                                std::span<const hsa::Agent> agents) {
  const hsa::Agent* cpu = nullptr;
  const hsa::Agent* fpga = nullptr;
  for (const hsa::Agent& agent : agents) {
    if (agent.kind == hsa::AgentKind::kCpu && cpu == nullptr) cpu = &agent;
    if (agent.kind == hsa::AgentKind::kFpga && fpga == nullptr) fpga = &agent;
  }
  if (cpu == nullptr) {
    return errors::ConfigError("placement needs at least one CPU agent");
  }

  Placement placement;
  for (const GraphNode& node : graph.nodes()) {
    if (node.kind != NodeKind::kCompute) continue;
    const hsa::KernelObject* host = registry.Lookup(
        node.op_type, hsa::AgentKind::kCpu, node.custom_name);
    if (host == nullptr) {
      return errors::NoCpuKernel(hsaflow::StrCat(
          "node '", node.id, "': no CPU kernel for ",
          node.op_type == OpType::kCustom ? "custom:" + node.custom_name
                                          : std::string(OpTypeName(node.op_type))));
    }
    NodePlacement where{cpu->id, hsa::AgentKind::kCpu, host->id, false};
    if (node.annotation == DeviceAnnotation::kFpga) {
      const hsa::KernelObject* accel = registry.Lookup(
          node.op_type, hsa::AgentKind::kFpga, node.custom_name);
      if (accel != nullptr && fpga != nullptr) {
        where = {fpga->id, hsa::AgentKind::kFpga, accel->id, false};
      } else {
        where.fallback = true;
      }
    }
    placement.nodes.emplace(node.id, std::move(where));
  }
  return placement;
}

}  // namespace hsaflow::graph
