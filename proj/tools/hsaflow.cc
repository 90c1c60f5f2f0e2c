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

// hsaflow: run a dataflow graph on the modelled CPU+FPGA system, or
// reproduce the per-role efficiency table.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hsaflow/cli/commands.h"

int main(int argc, char** argv) {
  using hsaflow::cli::RunConfig;
  CLI::App app{"Dataflow graphs on a modelled HSA runtime with an FPGA agent"};
  app.require_subcommand(1);

  RunConfig config;
  std::string layer;  // empty: keep the topology's layer
  std::string mode = "deterministic";
  int regions = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--topology", config.topology_path, "Topology JSON")
        ->check(CLI::ExistingFile);
    cmd->add_option("--manifest", config.manifest_path, "Role manifest JSON")
        ->check(CLI::ExistingFile);
    cmd->add_option("--calibration", config.calibration_path,
                    "CPU cycles-per-element JSON")
        ->check(CLI::ExistingFile);
    cmd->add_option("--layer", layer, "Dispatch layer")
        ->check(CLI::IsMember({"tf", "hsa"}));
    cmd->add_option("--regions", regions,
                    "Override the reconfigurable region count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--mode", mode, "Execution mode")
        ->check(CLI::IsMember({"deterministic", "concurrent"}));
    cmd->add_option("--seed", config.seed, "Seed for synthesized inputs");
    cmd->add_option("--out", config.out_dir, "Output directory");
  };

  CLI::App* run = app.add_subcommand("run", "Execute a graph and write reports");
  add_common(run);
  // Existence is checked by the command so the diagnostic is uniform.
  run->add_option("--graph", config.graph_path, "Graph JSON (default: demo)");
  run->add_option("--input", config.inputs, "INPUT tensor as name=path");

  CLI::App* bench = app.add_subcommand("bench", "Per-role OP/cycle increase");
  add_common(bench);
  bench->add_option("--reps", config.reps, "Repetitions per role")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (!layer.empty()) config.layer = hsaflow::metrics::ParseLayer(layer);
  if (regions > 0) config.regions = regions;
  config.mode = mode == "concurrent" ? hsaflow::hsa::ExecutionMode::kConcurrent
                                     : hsaflow::hsa::ExecutionMode::kDeterministic;
  if (*run) return hsaflow::cli::CmdRun(config, std::cout, std::cerr);
  return hsaflow::cli::CmdBench(config, std::cout, std::cerr);
}
