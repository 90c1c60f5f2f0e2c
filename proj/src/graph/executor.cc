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

#include "hsaflow/graph/executor.h"

#include <future>
#include <set>

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/common/status_macros.h"

namespace hsaflow::graph {
namespace {

// A node launched but not yet complete.
struct InFlight {
  std::string node_id;
  hsa::SignalHandle signal;
  std::shared_ptr<hsa::PacketResult> result;
  std::future<absl::StatusOr<hsa::HostExecution>> host;
};

class Execution {
 public:
  Execution(const Graph& graph, const Placement& placement,
            hsa::Runtime& runtime, const RunOptions& options)
      : graph_(graph),
        placement_(placement),
        runtime_(runtime),
        options_(options) {}

  absl::Status Seed(const std::map<std::string, Tensor>& inputs) {
    for (const GraphNode& node : graph_.nodes()) {
      if (node.kind == NodeKind::kConst) {
        values_[node.id] = *node.value;
      } else if (node.kind == NodeKind::kInput) {
        auto it = inputs.find(node.id);
        if (it == inputs.end()) {
          return errors::MissingInput(
              hsaflow::StrCat("no tensor supplied for INPUT '", node.id, "'"));
        }
        if (node.spec && (it->second.dtype() != node.spec->dtype ||
                          it->second.shape() != node.spec->shape)) {
          return errors::ShapeMismatch(hsaflow::StrCat(
              "INPUT '", node.id, "' declares ", DTypeName(node.spec->dtype),
              " ", ShapeString(node.spec->shape), ", got ",
              DTypeName(it->second.dtype()), " ",
              ShapeString(it->second.shape())));
        }
        values_[node.id] = it->second;
      }
    }
    return absl::OkStatus();
  }

  absl::Status RunSequential() {
    for (const std::string& id : graph_.topological_order()) {
      const GraphNode& node = *graph_.Find(id);
      if (node.kind == NodeKind::kInput || node.kind == NodeKind::kConst) {
        continue;
      }
      HSAFLOW_ASSIGN_OR_RETURN(InFlight launched, Launch(node, false));
      HSAFLOW_RETURN_IF_ERROR(Complete(launched));
    }
    return absl::OkStatus();
  }

  absl::Status RunWaves() {
    std::map<std::string, int> missing;
    for (const GraphNode& node : graph_.nodes()) {
      int count = 0;
      for (const std::string& input : node.inputs) {
        if (!values_.contains(input)) ++count;
      }
      if (!values_.contains(node.id)) missing[node.id] = count;
    }
    while (!missing.empty()) {
      std::vector<std::string> wave;
      for (const auto& [id, count] : missing) {
        if (count == 0) wave.push_back(id);
      }
      if (wave.empty()) {
        return absl::InternalError("graph stalled with unsatisfied nodes");
      }
      std::vector<InFlight> launched;
      absl::Status first_error;
      for (const std::string& id : wave) {
        auto flight = Launch(*graph_.Find(id), true);
        if (!flight.ok()) {
          first_error.Update(flight.status());
          break;
        }
        launched.push_back(*std::move(flight));
      }
      // Drain everything launched before reporting any failure.
      for (InFlight& flight : launched) first_error.Update(Complete(flight));
      HSAFLOW_RETURN_IF_ERROR(first_error);
      for (const std::string& id : wave) {
        missing.erase(id);
        for (const GraphNode& node : graph_.nodes()) {
          if (!missing.contains(node.id)) continue;
          for (const std::string& input : node.inputs) {
            if (input == id) --missing[node.id];
          }
        }
      }
    }
    return absl::OkStatus();
  }

  std::map<std::string, Tensor> Outputs() const {
    std::map<std::string, Tensor> outputs;
    for (const std::string& id : graph_.output_ids()) {
      outputs.emplace(id, values_.at(id));
    }
    return outputs;
  }

  int64_t dispatches() const { return dispatches_; }
  int64_t reconfigurations() const { return reconfigurations_; }

 private:
  std::vector<Tensor> Operands(const GraphNode& node) const {
    std::vector<Tensor> args;
    args.reserve(node.inputs.size());
    for (const std::string& input : node.inputs) args.push_back(values_.at(input));
    return args;
  }

  absl::StatusOr<InFlight> Launch(const GraphNode& node, bool async) {
    InFlight flight;
    flight.node_id = node.id;
    if (node.kind == NodeKind::kOutput) return flight;

    auto where = placement_.nodes.find(node.id);
    if (where == placement_.nodes.end()) {
      return absl::FailedPreconditionError(
          hsaflow::StrCat("node '", node.id, "' has no placement"));
    }
    const hsa::KernelObject* kernel =
        runtime_.registry().Find(where->second.kernel_id);
    if (kernel == nullptr) {
      return absl::FailedPreconditionError(hsaflow::StrCat(
          "node '", node.id, "' is placed on unknown kernel ",
          where->second.kernel_id));
    }

    if (where->second.kind == hsa::AgentKind::kCpu) {
      auto task = [this, kernel, args = Operands(node), label = node.id] {
        return runtime_.ExecuteOnHost(*kernel, args, label);
      };
      flight.host = std::async(async ? std::launch::async : std::launch::deferred,
                               std::move(task));
      return flight;
    }

    HSAFLOW_ASSIGN_OR_RETURN(hsa::Queue * queue,
                             runtime_.DefaultQueue(where->second.agent_id));
    hsa::DispatchPacket packet;
    packet.kernel = kernel->id;
    packet.args = Operands(node);
    packet.label = node.id;
    packet.completion = runtime_.CreateSignal(1);
    flight.signal = packet.completion;
    flight.result = packet.result;
    HSAFLOW_RETURN_IF_ERROR(runtime_.Submit(*queue, std::move(packet)));
    ++dispatches_;
    return flight;
  }

  absl::Status Complete(InFlight& flight) {
    const GraphNode& node = *graph_.Find(flight.node_id);
    if (node.kind == NodeKind::kOutput) {
      values_[node.id] = values_.at(node.inputs.front());
      return absl::OkStatus();
    }
    if (flight.host.valid()) {
      absl::StatusOr<hsa::HostExecution> host = flight.host.get();
      if (!host.ok()) return Annotate(node, host.status());
      values_[node.id] = std::move(host->output);
      return absl::OkStatus();
    }
    HSAFLOW_RETURN_IF_ERROR(
        runtime_.Wait(*flight.signal, 0, options_.wait_timeout).status());
    if (!flight.result->status.ok()) {
      return Annotate(node, flight.result->status);
    }
    if (flight.result->reconfigured) ++reconfigurations_;
    values_[node.id] = std::move(flight.result->output);
    return absl::OkStatus();
  }

  static absl::Status Annotate(const GraphNode& node, const absl::Status& st) {
    return absl::Status(st.code(),
                        hsaflow::StrCat(st.message(), " [node '", node.id, "']"));
  }

  const Graph& graph_;
  const Placement& placement_;
  hsa::Runtime& runtime_;
  const RunOptions& options_;
  std::map<std::string, Tensor> values_;
  int64_t dispatches_ = 0;
  int64_t reconfigurations_ = 0;
};

}  // namespace

absl::StatusOr<RunResult> Run(const Graph& graph, const Placement& placement,
                              hsa::Runtime& runtime,
                              const std::map<std::string, Tensor>& inputs,
                              const RunOptions& options) {
  const size_t first_event = runtime.EventCount();
  Execution exec(graph, placement, runtime, options);
  HSAFLOW_RETURN_IF_ERROR(exec.Seed(inputs));
  if (runtime.mode() == hsa::ExecutionMode::kDeterministic) {
    HSAFLOW_RETURN_IF_ERROR(exec.RunSequential());
  } else {
    HSAFLOW_RETURN_IF_ERROR(exec.RunWaves());
  }
  RunResult result;
  result.outputs = exec.Outputs();
  result.report = runtime.ReportSince(first_event);
  result.fpga_dispatches = exec.dispatches();
  result.reconfigurations = exec.reconfigurations();
  return result;
}

}  // namespace hsaflow::graph
