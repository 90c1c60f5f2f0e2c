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

#ifndef HSAFLOW_HSA_RUNTIME_H_
#define HSAFLOW_HSA_RUNTIME_H_

#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "absl/status/statusor.h"
#include "hsaflow/fpga/device.h"
#include "hsaflow/fpga/manifest.h"
#include "hsaflow/hsa/agent.h"
#include "hsaflow/hsa/queue.h"
#include "hsaflow/hsa/registry.h"
#include "hsaflow/hsa/signal.h"
#include "hsaflow/hsa/topology.h"
#include "hsaflow/metrics/efficiency.h"
#include "hsaflow/metrics/timeline.h"

namespace hsaflow::hsa {

// kDeterministic: no threads. Packets retire in global submission order
// while some caller waits on a signal, so every timestamp is reproducible.
// kConcurrent: one worker thread per queue retires packets as they arrive;
// accesses to each FPGA device are serialized by the device lock.
enum class ExecutionMode { kDeterministic, kConcurrent };

struct RuntimeOptions {
  TopologyConfig topology = DefaultTopology();
  fpga::Manifest manifest = fpga::DefaultManifest();
  metrics::Calibration calibration = metrics::DefaultCalibration();
  ExecutionMode mode = ExecutionMode::kDeterministic;
  // Populate the registry with the builtin CPU kernels and one FPGA kernel
  // per manifest role.
  bool register_cpu_kernels = true;
  bool register_fpga_kernels = true;
};

struct HostExecution {
  Tensor output;
  int64_t compute_cycles = 0;
  kernels::KernelTrace trace;
};

// One runtime session: the agents of a topology, their devices, the kernel
// registry and the session's cost timeline. Setup is charged once, when the
// first queue is created.
class Runtime {
 public:
  static absl::StatusOr<std::unique_ptr<Runtime>> Create(
      RuntimeOptions options = {});
  ~Runtime();

  Runtime(const Runtime&) = delete;
  Runtime& operator=(const Runtime&) = delete;

  // CPU agents first, then FPGA agents; ids ascending within each kind.
  std::vector<Agent> EnumerateAgents() const;
  const Agent* FindAgent(std::string_view agent_id) const;

  // Mutate only while no packets are in flight.
  KernelRegistry& registry() { return registry_; }
  const KernelRegistry& registry() const { return registry_; }

  // nullptr unless `agent_id` names an FPGA agent.
  fpga::Device* device(std::string_view agent_id);
  const metrics::CostConstants& costs() const { return costs_; }
  ExecutionMode mode() const { return mode_; }
  QueuePolicy queue_policy() const { return queue_policy_; }
  const kernels::FixedWeights* fixed_weights(OpType op) const;

  // depth must be a power of two in [1, 65536].
  absl::StatusOr<Queue*> CreateQueue(std::string_view agent_id, uint32_t depth);
  absl::Status DestroyQueue(Queue* queue);
  // Lazily created queue of depth 64 per agent.
  absl::StatusOr<Queue*> DefaultQueue(std::string_view agent_id);

  SignalHandle CreateSignal(int64_t initial) const;

  // Enqueues `packet` and charges one dispatch latency for the configured
  // layer. The packet's completion signal is decremented when it retires.
  absl::Status Submit(Queue& queue, DispatchPacket packet);

  // Returns the signal value once it is <= at_most, or Timeout. In
  // deterministic mode pending packets are retired while waiting and the
  // timeout fires as soon as nothing is left to retire.
  absl::StatusOr<int64_t> Wait(const Signal& signal, int64_t at_most,
                               std::chrono::microseconds timeout);

  // Runs a CPU kernel in the calling context, without a queue, and charges
  // its compute cycles under `label`.
  absl::StatusOr<HostExecution> ExecuteOnHost(const KernelObject& kernel,
                                               std::span<const Tensor> args,
                                               std::string_view label);

  // Serialized cost sink.
  absl::Status Charge(metrics::CostCategory category, uint64_t amount,
                      std::string detail);
  metrics::TimelineReport Report() const;
  size_t EventCount() const;
  metrics::TimelineReport ReportSince(size_t first_event) const;

 private:
  struct QueueSlot {
    std::unique_ptr<Queue> queue;
    std::thread worker;
  };

  explicit Runtime(RuntimeOptions options);
  absl::Status Init();

  // Deterministic mode: retires the pending packet with the lowest sequence
  // number. False when nothing is pending.
  bool RetireNext();
  void Retire(const Queue& queue, DispatchPacket packet);
  void RetireOnFpga(const Queue& queue, const KernelObject& kernel,
                    DispatchPacket& packet);
  void WorkerLoop(Queue* queue);

  RuntimeOptions options_;
  metrics::CostConstants costs_;
  ExecutionMode mode_;
  QueuePolicy queue_policy_;

  std::vector<Agent> agents_;
  std::map<std::string, fpga::Device, std::less<>> devices_;
  KernelRegistry registry_;

  std::mutex queues_mu_;
  std::vector<std::unique_ptr<QueueSlot>> queues_;
  std::map<std::string, Queue*, std::less<>> default_queues_;
  std::atomic<uint64_t> next_sequence_{0};

  mutable std::mutex report_mu_;
  metrics::TimelineReport report_;
};

}  // namespace hsaflow::hsa

#endif  // HSAFLOW_HSA_RUNTIME_H_
