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

#ifndef HSAFLOW_CLI_COMMANDS_H_
#define HSAFLOW_CLI_COMMANDS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "hsaflow/common/tensor.h"
#include "hsaflow/hsa/runtime.h"
#include "hsaflow/metrics/efficiency.h"

namespace hsaflow::cli {

struct RunConfig {
  // Empty paths select the builtin defaults (the demo graph for `graph`).
  std::string topology_path;
  std::string manifest_path;
  std::string graph_path;
  std::string calibration_path;
  // name=path pairs; unlisted INPUT nodes are synthesized from `seed`.
  std::vector<std::string> inputs;
  std::optional<metrics::Layer> layer;
  // Overrides the region count of every FPGA agent.
  std::optional<int> regions;
  uint32_t seed = 1;
  std::string out_dir = "out";
  hsa::ExecutionMode mode = hsa::ExecutionMode::kDeterministic;
  // bench only.
  int reps = 1000;
};

// Loads topology, manifest, calibration and applies the layer and region
// overrides. Fails on unreadable files or an override of fewer than 1 region.
absl::StatusOr<hsa::RuntimeOptions> BuildRuntimeOptions(const RunConfig& config);

std::string DefaultGraphPath();

// Operands for one bench invocation of `op`, with every extent multiplied by
// `scale`. FC is 10x16 by 16x10, CONV5x5 runs on 14x14 and CONV3x3x2 on
// 12x12, so each produces at least 100 output elements.
std::vector<Tensor> BenchOperands(OpType op, int scale, uint32_t seed);

// Runs every builtin role `reps` times on the FPGA and on the CPU and returns
// one figure per role, in manifest order.
absl::StatusOr<std::vector<metrics::EfficiencyFigure>> RunBench(
    const RunConfig& config, int scale = 1);

// Exit codes: 0 on success, 1 on any error (diagnostic written to `err`).
int CmdRun(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdBench(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hsaflow::cli

#endif  // HSAFLOW_CLI_COMMANDS_H_
