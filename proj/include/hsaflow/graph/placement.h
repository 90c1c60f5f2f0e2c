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

#ifndef HSAFLOW_GRAPH_PLACEMENT_H_
#define HSAFLOW_GRAPH_PLACEMENT_H_

#include <map>
#include <span>
#include <string>

#include "absl/status/statusor.h"
#include "hsaflow/graph/graph.h"
#include "hsaflow/hsa/agent.h"
#include "hsaflow/hsa/registry.h"

namespace hsaflow::graph {

struct NodePlacement {
  std::string agent_id;
  hsa::AgentKind kind = hsa::AgentKind::kCpu;
  hsa::KernelId kernel_id = 0;
  // The node asked for an FPGA but no FPGA kernel is registered for its op.
  bool fallback = false;

  friend bool operator==(const NodePlacement&, const NodePlacement&) = default;
};

// Placement of every compute node; INPUT, CONST and OUTPUT nodes live on
// the host and are not listed.
struct Placement {
  std::map<std::string, NodePlacement> nodes;

  int fallback_count() const;
  int fpga_count() const;

  friend bool operator==(const Placement&, const Placement&) = default;
};

// FPGA-annotated nodes go to the first FPGA agent when an FPGA kernel is
// registered for their op, otherwise to the first CPU agent with
// fallback=true. Everything else runs on the first CPU agent. Fails with
// NoCpuKernel when some compute op has no CPU implementation.
absl::StatusOr<Placement> Place(const Graph& graph,
                                const hsa::KernelRegistry& registry,
                                std::span<const hsa::Agent> agents);

}  // namespace hsaflow::graph

#endif  // HSAFLOW_GRAPH_PLACEMENT_H_
