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

#include "hsaflow/cli/commands.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/common/status_macros.h"
#include "hsaflow/graph/executor.h"
#include "hsaflow/graph/graph.h"
#include "hsaflow/graph/placement.h"
#include "hsaflow/kernels/kernels.h"
#include "hsaflow/metrics/report_io.h"

namespace hsaflow::cli {
namespace fs = std::filesystem;
namespace {

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return errors::ConfigError(hsaflow::StrCat("file not found: ", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::Status WriteFile(const fs::path& path, const std::string& contents,
                       std::ostream& err) {
  if (fs::exists(path)) {
    err << "warning: overwriting " << path.string() << "\n";
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        hsaflow::StrCat("cannot write ", path.string()));
  }
  out << contents;
  return absl::OkStatus();
}

absl::StatusOr<std::map<std::string, Tensor>> LoadInputs(
    const RunConfig& config, const graph::Graph& g) {
  std::map<std::string, Tensor> inputs = graph::SynthesizeInputs(g, config.seed);
  for (const std::string& entry : config.inputs) {
    size_t eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      return errors::ConfigError(
          hsaflow::StrCat("--input expects name=path, got '", entry, "'"));
    }
    std::string name = entry.substr(0, eq);
    HSAFLOW_ASSIGN_OR_RETURN(std::string text, ReadFile(entry.substr(eq + 1)));
    HSAFLOW_ASSIGN_OR_RETURN(Tensor t, ParseTensorLiteral(text));
    inputs[name] = std::move(t);
  }
  return inputs;
}

absl::Status DoRun(const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
  HSAFLOW_ASSIGN_OR_RETURN(hsa::RuntimeOptions options,
                           BuildRuntimeOptions(config));
  std::string graph_path =
      config.graph_path.empty() ? DefaultGraphPath() : config.graph_path;
  HSAFLOW_ASSIGN_OR_RETURN(graph::Graph g, graph::LoadGraph(graph_path));
  HSAFLOW_ASSIGN_OR_RETURN(auto inputs, LoadInputs(config, g));
  HSAFLOW_ASSIGN_OR_RETURN(std::unique_ptr<hsa::Runtime> runtime,
                           hsa::Runtime::Create(std::move(options)));
  std::vector<hsa::Agent> agents = runtime->EnumerateAgents();
  HSAFLOW_ASSIGN_OR_RETURN(graph::Placement placement,
                           graph::Place(g, runtime->registry(), agents));
  for (const auto& [id, p] : placement.nodes) {
    if (p.fallback) err << "note: node '" << id << "' falls back to the CPU\n";
  }
  HSAFLOW_ASSIGN_OR_RETURN(graph::RunResult result,
                           graph::Run(g, placement, *runtime, inputs));

  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        hsaflow::StrCat("cannot create ", config.out_dir, ": ", ec.message()));
  }
  const fs::path dir(config.out_dir);
  nlohmann::json report =
      metrics::ReportToJson(result.report, runtime->costs());
  std::string text = metrics::ReportToText(result.report, runtime->costs());
  HSAFLOW_RETURN_IF_ERROR(
      WriteFile(dir / "report.json", report.dump(2) + "\n", err));
  HSAFLOW_RETURN_IF_ERROR(WriteFile(dir / "report.txt", text, err));
  for (const auto& [id, tensor] : result.outputs) {
    HSAFLOW_RETURN_IF_ERROR(WriteFile(dir / (id + ".tensor"),
                                      FormatTensorLiteral(tensor) + "\n", err));
  }
  out << text;
  return absl::OkStatus();
}

}  // namespace

std::string DefaultGraphPath() {
  return hsaflow::StrCat(HSAFLOW_DATA_DIR, "/demo_graph.json");
}

absl::StatusOr<hsa::RuntimeOptions> BuildRuntimeOptions(
    const RunConfig& config) {
  hsa::RuntimeOptions options;
  options.mode = config.mode;
  if (!config.topology_path.empty()) {
    HSAFLOW_ASSIGN_OR_RETURN(options.topology,
                             hsa::LoadTopology(config.topology_path));
  }
  if (!config.manifest_path.empty()) {
    HSAFLOW_ASSIGN_OR_RETURN(options.manifest,
                             fpga::LoadManifest(config.manifest_path));
  }
  if (!config.calibration_path.empty()) {
    HSAFLOW_ASSIGN_OR_RETURN(options.calibration,
                             metrics::LoadCalibration(config.calibration_path));
  }
  if (config.layer) options.topology.costs.layer = *config.layer;
  if (config.regions) {
    if (*config.regions < 1) {
      return errors::ConfigError(
          hsaflow::StrCat("--regions must be >= 1, got ", *config.regions));
    }
    for (hsa::AgentSpec& agent : options.topology.agents) {
      if (agent.kind == hsa::AgentKind::kFpga) agent.regions = *config.regions;
    }
  }
  return options;
}

std::vector<Tensor> BenchOperands(OpType op, int scale, uint32_t seed) {
  const int64_t s = scale;
  switch (op) {
    case OpType::kFcF32:
    case OpType::kFcF32Barrier:
      return {RandomF32({10 * s, 16 * s}, seed),
              RandomF32({16 * s, 10 * s}, seed + 1),
              RandomF32({10 * s}, seed + 2)};
    case OpType::kConv5x5I16:
      return {RandomI16({14 * s, 14 * s}, seed, -1024, 1023)};
    case OpType::kConv3x3x2I16:
      return {RandomI16({12 * s, 12 * s}, seed, -1024, 1023)};
    case OpType::kCustom:
      break;
  }
  return {};
}

absl::StatusOr<std::vector<metrics::EfficiencyFigure>> RunBench(
    const RunConfig& config, int scale) {
  if (config.reps < 1) {
    return errors::ConfigError(
        hsaflow::StrCat("--reps must be >= 1, got ", config.reps));
  }
  if (scale < 1) return absl::InvalidArgumentError("scale must be >= 1");
  HSAFLOW_ASSIGN_OR_RETURN(hsa::RuntimeOptions options,
                           BuildRuntimeOptions(config));
  // Efficiency compares compute only; the layer's overheads do not enter.
  options.mode = hsa::ExecutionMode::kDeterministic;
  const std::vector<fpga::Role> roles = options.manifest.roles;
  HSAFLOW_ASSIGN_OR_RETURN(std::unique_ptr<hsa::Runtime> runtime,
                           hsa::Runtime::Create(std::move(options)));
  const hsa::Agent* fpga_agent = nullptr;
  for (const hsa::Agent& a : runtime->EnumerateAgents()) {
    if (a.kind == hsa::AgentKind::kFpga && fpga_agent == nullptr) {
      fpga_agent = runtime->FindAgent(a.id);
    }
  }
  if (fpga_agent == nullptr) {
    return errors::ConfigError("bench needs an FPGA agent in the topology");
  }
  HSAFLOW_ASSIGN_OR_RETURN(hsa::Queue * queue,
                           runtime->DefaultQueue(fpga_agent->id));

  std::vector<metrics::EfficiencyFigure> figures;
  for (const fpga::Role& role : roles) {
    if (role.op_type == OpType::kCustom) continue;
    const hsa::KernelObject* accel =
        runtime->registry().Lookup(role.op_type, hsa::AgentKind::kFpga);
    const hsa::KernelObject* cpu =
        runtime->registry().Lookup(role.op_type, hsa::AgentKind::kCpu);
    if (accel == nullptr || cpu == nullptr) {
      return errors::NoCpuKernel(
          hsaflow::StrCat("no kernel pair for role ", role.id));
    }
    std::vector<Tensor> args = BenchOperands(role.op_type, scale, config.seed);
    std::vector<Shape> shapes;
    for (const Tensor& t : args) shapes.push_back(t.shape());
    HSAFLOW_ASSIGN_OR_RETURN(int64_t ops,
                             kernels::OpCount(role.op_type, shapes));

    int64_t accel_cycles = 0;
    int64_t cpu_cycles = 0;
    for (int rep = 0; rep < config.reps; ++rep) {
      hsa::DispatchPacket packet;
      packet.kernel = accel->id;
      packet.args = args;
      packet.label = role.id;
      packet.completion = runtime->CreateSignal(1);
      hsa::SignalHandle done = packet.completion;
      std::shared_ptr<hsa::PacketResult> result = packet.result;
      HSAFLOW_RETURN_IF_ERROR(runtime->Submit(*queue, std::move(packet)));
      HSAFLOW_RETURN_IF_ERROR(
          runtime->Wait(*done, 0, std::chrono::seconds(10)).status());
      HSAFLOW_RETURN_IF_ERROR(result->status);
      accel_cycles += result->compute_cycles;

      HSAFLOW_ASSIGN_OR_RETURN(hsa::HostExecution host,
                               runtime->ExecuteOnHost(*cpu, args, role.id));
      cpu_cycles += host.compute_cycles;
      if (!(host.output == result->output)) {
        return absl::InternalError(
            hsaflow::StrCat("role ", role.id, " disagrees with the CPU kernel"));
      }
    }
    HSAFLOW_ASSIGN_OR_RETURN(
        metrics::EfficiencyFigure fig,
        metrics::Efficiency(role.id, ops * config.reps, accel_cycles,
                            cpu_cycles));
    figures.push_back(std::move(fig));
  }
  return figures;
}

int CmdRun(const RunConfig& config, std::ostream& out, std::ostream& err) {
  absl::Status st = DoRun(config, out, err);
  if (!st.ok()) {
    err << "error: " << st.message() << "\n";
    return 1;
  }
  return 0;
}

int CmdBench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto figures = RunBench(config);
  if (!figures.ok()) {
    err << "error: " << figures.status().message() << "\n";
    return 1;
  }
  std::string text = metrics::EfficiencyToText(*figures);
  out << text;
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) {
    err << "error: cannot create " << config.out_dir << ": " << ec.message()
        << "\n";
    return 1;
  }
  const fs::path dir(config.out_dir);
  absl::Status st = WriteFile(
      dir / "bench.json", metrics::EfficiencyToJson(*figures).dump(2) + "\n",
      err);
  st.Update(WriteFile(dir / "bench.txt", text, err));
  if (!st.ok()) {
    err << "error: " << st.message() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hsaflow::cli
