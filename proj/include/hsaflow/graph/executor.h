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

#ifndef HSAFLOW_GRAPH_EXECUTOR_H_
#define HSAFLOW_GRAPH_EXECUTOR_H_

#include <chrono>
#include <map>
#include <string>

#include "absl/status/statusor.h"
#include "hsaflow/graph/graph.h"
#include "hsaflow/graph/placement.h"
#include "hsaflow/hsa/runtime.h"
#include "hsaflow/metrics/timeline.h"

namespace hsaflow::graph {

struct RunResult {
  // Keyed by OUTPUT node id.
  std::map<std::string, Tensor> outputs;
  // Cost events charged during this run only.
  metrics::TimelineReport report;
  int64_t fpga_dispatches = 0;
  int64_t reconfigurations = 0;
};

struct RunOptions {
  std::chrono::microseconds wait_timeout = std::chrono::seconds(60);
};

// Executes `graph` on `runtime`. CPU-placed nodes run in the calling context;
// each FPGA-placed node becomes one dispatch packet whose completion signal
// is awaited. In the runtime's deterministic mode nodes run one at a time in
// topological order; in concurrent mode every ready node of a wave is
// launched before any is awaited. Outputs do not depend on the mode or on
// placement.
absl::StatusOr<RunResult> Run(const Graph& graph, const Placement& placement,
                              hsa::Runtime& runtime,
                              const std::map<std::string, Tensor>& inputs,
                              const RunOptions& options = {});

}  // namespace hsaflow::graph

#endif  // HSAFLOW_GRAPH_EXECUTOR_H_
