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

#ifndef HSAFLOW_HSA_TOPOLOGY_H_
#define HSAFLOW_HSA_TOPOLOGY_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "hsaflow/fpga/resources.h"
#include "hsaflow/hsa/agent.h"
#include "hsaflow/hsa/queue.h"
#include "hsaflow/metrics/cost.h"

namespace hsaflow::hsa {

struct AgentSpec {
  std::string id;
  AgentKind kind = AgentKind::kCpu;
  std::string name;
  // FPGA agents only.
  fpga::ResourceVector capacity;
  fpga::ResourceVector shell;
  int regions = 0;
  // Roles present in the initial full configuration (no reconfiguration
  // is charged for them).
  std::vector<std::string> preloaded;
};

struct TopologyConfig {
  std::vector<AgentSpec> agents;
  metrics::CostConstants costs;
  QueuePolicy queue_policy = QueuePolicy::kBlock;
};

// One CPU agent "cpu0" and one FPGA agent "fpga0" with the default capacity,
// shell and two regions.
TopologyConfig DefaultTopology();

// JSON document:
//
//   { "agents": [
//       { "id": "cpu0", "kind": "cpu" },
//       { "id": "fpga0", "kind": "fpga",
//         "capacity": {"lut": 70560, "ff": 141120, "bram": 216, "dsp": 360},
//         "shell": {...}, "regions": 2, "preloaded": [] } ],
//     "costs": { "setup_us": {"tf": 156230, "hsa": 39032},
//                "reconfig_us": 7424,
//                "dispatch_us_tf": 27, "dispatch_us_hsa": 10 },
//     "layer": "tf",
//     "queue_policy": "block" }
//
// Omitted FPGA fields and cost constants take the defaults above.
absl::StatusOr<TopologyConfig> ParseTopology(std::string_view json_text);
absl::StatusOr<TopologyConfig> LoadTopology(const std::string& path);

// Unique ids, CPU agents without capacity, FPGA agents with >= 1 region.
absl::Status ValidateTopology(const TopologyConfig& config);

}  // namespace hsaflow::hsa

#endif  // HSAFLOW_HSA_TOPOLOGY_H_
