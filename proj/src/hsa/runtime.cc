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

#include "hsaflow/hsa/runtime.h"

#include <algorithm>
#include <limits>

#include "absl/strings/ascii.h"
#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/common/status_macros.h"

namespace hsaflow::hsa {

using metrics::CostCategory;

Runtime::Runtime(RuntimeOptions options)
    : options_(std::move(options)),
      costs_(options_.topology.costs),
      mode_(options_.mode),
      queue_policy_(options_.topology.queue_policy) {}

absl::StatusOr<std::unique_ptr<Runtime>> Runtime::Create(
    RuntimeOptions options) {
  HSAFLOW_RETURN_IF_ERROR(ValidateTopology(options.topology));
  std::unique_ptr<Runtime> runtime(new Runtime(std::move(options)));
  HSAFLOW_RETURN_IF_ERROR(runtime->Init());
  return runtime;
}

absl::Status Runtime::Init() {
  bool has_fpga = false;
  for (const AgentSpec& spec : options_.topology.agents) {
    Agent agent{spec.id, spec.kind, spec.name, {}};
    if (spec.kind == AgentKind::kFpga) {
      has_fpga = true;
      agent.capacity = spec.capacity;
      HSAFLOW_ASSIGN_OR_RETURN(
          fpga::Device device,
          fpga::Device::Create({spec.id, spec.shell, spec.capacity,
                                spec.regions}));
      for (const fpga::Role& role : options_.manifest.roles) {
        HSAFLOW_RETURN_IF_ERROR(device.InstallRole(role));
      }
      for (const std::string& role_id : spec.preloaded) {
        HSAFLOW_RETURN_IF_ERROR(device.Preload(role_id));
      }
      devices_.emplace(spec.id, std::move(device));
    }
    agents_.push_back(std::move(agent));
  }
  std::stable_sort(agents_.begin(), agents_.end(),
                   [](const Agent& a, const Agent& b) {
                     if (a.kind != b.kind) return a.kind == AgentKind::kCpu;
                     return a.id < b.id;
                   });

  if (options_.register_cpu_kernels) {
    const metrics::Calibration defaults = metrics::DefaultCalibration();
    for (OpType op : kBuiltinOpTypes) {
      auto rate = options_.calibration.cpu_cycles_per_element.find(op);
      KernelObject kernel;
      kernel.op_type = op;
      kernel.device_kind = AgentKind::kCpu;
      kernel.body = SoftwareFn{
          absl::AsciiStrToLower(ToAbsl(OpTypeName(op))),
          rate != options_.calibration.cpu_cycles_per_element.end()
              ? rate->second
              : defaults.cpu_cycles_per_element.at(op),
          {}};
      HSAFLOW_RETURN_IF_ERROR(registry_.Register(std::move(kernel)).status());
    }
  }
  if (options_.register_fpga_kernels && has_fpga) {
    for (const fpga::Role& role : options_.manifest.roles) {
      KernelObject kernel;
      kernel.op_type = role.op_type;
      kernel.custom_name = role.custom_name;
      kernel.device_kind = AgentKind::kFpga;
      kernel.body =
          BitstreamRole{role.id, role.footprint, role.cycles_per_element};
      HSAFLOW_RETURN_IF_ERROR(registry_.Register(std::move(kernel)).status());
    }
  }
  return absl::OkStatus();
}

Runtime::~Runtime() {
  std::lock_guard<std::mutex> lock(queues_mu_);
  for (auto& slot : queues_) {
    slot->queue->Destroy();
    if (slot->worker.joinable()) slot->worker.join();
  }
}

std::vector<Agent> Runtime::EnumerateAgents() const { return agents_; }

const Agent* Runtime::FindAgent(std::string_view agent_id) const {
  for (const Agent& agent : agents_) {
    if (agent.id == agent_id) return &agent;
  }
  return nullptr;
}

fpga::Device* Runtime::device(std::string_view agent_id) {
  auto it = devices_.find(agent_id);
  return it == devices_.end() ? nullptr : &it->second;
}

const kernels::FixedWeights* Runtime::fixed_weights(OpType op) const {
  auto it = options_.manifest.fixed_weights.find(op);
  return it == options_.manifest.fixed_weights.end() ? nullptr : &it->second;
}

absl::StatusOr<Queue*> Runtime::CreateQueue(std::string_view agent_id,
                                            uint32_t depth) {
  const Agent* agent = FindAgent(agent_id);
  if (agent == nullptr) {
    return errors::UnknownAgent(hsaflow::StrCat("no agent '", agent_id, "'"));
  }
  if (depth == 0 || depth > (1u << 16) || (depth & (depth - 1)) != 0) {
    return errors::InvalidDepth(hsaflow::StrCat(
        "queue depth ", depth, " is not a power of two in [1, 65536]"));
  }
  {
    std::lock_guard<std::mutex> lock(report_mu_);
    if (!report_.setup_charged()) {
      HSAFLOW_RETURN_IF_ERROR(report_.Charge(
          CostCategory::kSetup, costs_.setup_us(),
          hsaflow::StrCat("device/kernel setup (", metrics::LayerName(costs_.layer),
                       ")")));
    }
  }
  std::lock_guard<std::mutex> lock(queues_mu_);
  auto slot = std::make_unique<QueueSlot>();
  slot->queue = std::make_unique<Queue>(static_cast<int>(queues_.size()),
                                        *agent, depth);
  Queue* queue = slot->queue.get();
  if (mode_ == ExecutionMode::kConcurrent) {
    slot->worker = std::thread([this, queue] { WorkerLoop(queue); });
  }
  queues_.push_back(std::move(slot));
  return queue;
}

absl::Status Runtime::DestroyQueue(Queue* queue) {
  std::lock_guard<std::mutex> lock(queues_mu_);
  for (auto& slot : queues_) {
    if (slot->queue.get() != queue) continue;
    queue->Destroy();
    if (slot->worker.joinable()) slot->worker.join();
    for (auto it = default_queues_.begin(); it != default_queues_.end(); ++it) {
      if (it->second == queue) {
        default_queues_.erase(it);
        break;
      }
    }
    return absl::OkStatus();
  }
  return absl::NotFoundError("queue does not belong to this runtime");
}

absl::StatusOr<Queue*> Runtime::DefaultQueue(std::string_view agent_id) {
  {
    std::lock_guard<std::mutex> lock(queues_mu_);
    auto it = default_queues_.find(agent_id);
    if (it != default_queues_.end()) return it->second;
  }
  HSAFLOW_ASSIGN_OR_RETURN(Queue * queue, CreateQueue(agent_id, 64));
  std::lock_guard<std::mutex> lock(queues_mu_);
  auto [it, inserted] = default_queues_.emplace(std::string(agent_id), queue);
  return it->second;
}

SignalHandle Runtime::CreateSignal(int64_t initial) const {
  return std::make_shared<Signal>(initial);
}

absl::Status Runtime::Submit(Queue& queue, DispatchPacket packet) {
  const KernelObject* kernel = registry_.Find(packet.kernel);
  if (kernel == nullptr) {
    return absl::NotFoundError(
        hsaflow::StrCat("packet names unknown kernel ", packet.kernel));
  }
  if (kernel->device_kind != queue.agent().kind) {
    return errors::DeviceKindMismatch(hsaflow::StrCat(
        AgentKindName(kernel->device_kind), " kernel ",
        OpTypeName(kernel->op_type), " submitted to ",
        AgentKindName(queue.agent().kind), " queue of ", queue.agent().id));
  }
  if (!packet.completion) {
    return absl::InvalidArgumentError("packet has no completion signal");
  }
  if (!packet.result) packet.result = std::make_shared<PacketResult>();
  if (packet.label.empty()) packet.label = std::string(OpTypeName(kernel->op_type));

  const auto on_accept = [this](DispatchPacket& p) {
    std::lock_guard<std::mutex> lock(report_mu_);
    p.sequence = next_sequence_++;
    p.enqueue_time_us = report_.now_us();
    // Cannot fail: only setup charges are refused.
    report_.Charge(CostCategory::kDispatch, costs_.dispatch_us(), p.label)
        .IgnoreError();
  };

  Queue::PushResult pushed;
  if (mode_ == ExecutionMode::kDeterministic) {
    pushed = queue.TryPush(packet, on_accept);
    if (pushed == Queue::PushResult::kFull &&
        queue_policy_ == QueuePolicy::kBlock) {
      // Nothing else will drain the queue, so retire its head in place.
      if (auto head = queue.TryPop()) Retire(queue, std::move(*head));
      pushed = queue.TryPush(packet, on_accept);
    }
  } else if (queue_policy_ == QueuePolicy::kBlock) {
    pushed = queue.PushBlocking(packet, on_accept);
  } else {
    pushed = queue.TryPush(packet, on_accept);
  }

  switch (pushed) {
    case Queue::PushResult::kAccepted:
      return absl::OkStatus();
    case Queue::PushResult::kFull:
      return errors::QueueFull(hsaflow::StrCat("queue ", queue.id(), " on ",
                                            queue.agent().id, " holds ",
                                            queue.depth(), " packets"));
    case Queue::PushResult::kDestroyed:
      break;
  }
  return errors::QueueDestroyed(
      hsaflow::StrCat("queue ", queue.id(), " has been destroyed"));
}

absl::StatusOr<int64_t> Runtime::Wait(const Signal& signal, int64_t at_most,
                                      std::chrono::microseconds timeout) {
  if (mode_ == ExecutionMode::kConcurrent) {
    return signal.WaitLessEqual(at_most, timeout);
  }
  while (true) {
    const int64_t value = signal.Load();
    if (value <= at_most) return value;
    if (!RetireNext()) {
      return errors::Timeout(hsaflow::StrCat("signal value ", value,
                                          " still above ", at_most,
                                          " and no packet left to retire"));
    }
  }
}

bool Runtime::RetireNext() {
  Queue* next = nullptr;
  uint64_t lowest = std::numeric_limits<uint64_t>::max();
  {
    std::lock_guard<std::mutex> lock(queues_mu_);
    for (auto& slot : queues_) {
      auto head = slot->queue->HeadSequence();
      if (head && *head < lowest) {
        lowest = *head;
        next = slot->queue.get();
      }
    }
  }
  if (next == nullptr) return false;
  auto packet = next->TryPop();
  if (!packet) return false;
  Retire(*next, std::move(*packet));
  return true;
}

void Runtime::WorkerLoop(Queue* queue) {
  while (auto packet = queue->PopBlocking()) {
    Retire(*queue, std::move(*packet));
  }
}

void Runtime::Retire(const Queue& queue, DispatchPacket packet) {
  const KernelObject* kernel = registry_.Find(packet.kernel);
  if (kernel == nullptr) {
    packet.result->status = absl::NotFoundError(
        hsaflow::StrCat("kernel ", packet.kernel, " vanished before retirement"));
  } else if (kernel->device_kind == AgentKind::kFpga) {
    RetireOnFpga(queue, *kernel, packet);
  } else {
    auto host = ExecuteOnHost(*kernel, packet.args, packet.label);
    if (host.ok()) {
      packet.result->output = std::move(host->output);
      packet.result->compute_cycles = host->compute_cycles;
      packet.result->trace = host->trace;
    } else {
      packet.result->status = host.status();
    }
  }
  packet.completion->Decrement();
}

void Runtime::RetireOnFpga(const Queue& queue, const KernelObject& kernel,
                           DispatchPacket& packet) {
  PacketResult& result = *packet.result;
  fpga::Device* dev = device(queue.agent().id);
  if (dev == nullptr) {
    result.status = absl::FailedPreconditionError(
        hsaflow::StrCat(queue.agent().id, " has no FPGA device"));
    return;
  }
  const auto& role = std::get<BitstreamRole>(kernel.body);
  std::lock_guard<std::mutex> lock(dev->mutex());
  auto load = dev->EnsureLoaded(role.role_id);
  if (!load.ok()) {
    result.status = load.status();
    return;
  }
  result.region = load->region;
  result.reconfigured = load->reconfigured;
  if (load->reconfigured) {
    Charge(CostCategory::kReconfig, costs_.reconfig_us,
           hsaflow::StrCat(queue.agent().id, ":", role.role_id))
        .IgnoreError();
  }
  auto exec = dev->ExecuteRole(load->region, role.role_id, packet.args);
  if (!exec.ok()) {
    result.status = exec.status();
    return;
  }
  result.output = std::move(exec->output);
  result.compute_cycles = exec->compute_cycles;
  result.trace = exec->trace;
  Charge(CostCategory::kCompute, static_cast<uint64_t>(exec->compute_cycles),
         packet.label)
      .IgnoreError();
}

absl::StatusOr<HostExecution> Runtime::ExecuteOnHost(
    const KernelObject& kernel, std::span<const Tensor> args,
    std::string_view label) {
  if (kernel.device_kind != AgentKind::kCpu) {
    return errors::DeviceKindMismatch(
        hsaflow::StrCat(OpTypeName(kernel.op_type), " is not a CPU kernel"));
  }
  const auto& fn = std::get<SoftwareFn>(kernel.body);
  HostExecution exec;
  if (kernel.op_type == OpType::kCustom) {
    if (!fn.fn) {
      return absl::FailedPreconditionError(hsaflow::StrCat(
          "custom kernel '", kernel.custom_name, "' has no function body"));
    }
    HSAFLOW_ASSIGN_OR_RETURN(exec.output, fn.fn(args));
  } else {
    HSAFLOW_ASSIGN_OR_RETURN(
        exec.output, kernels::RunBuiltin(kernel.op_type, args,
                                         fixed_weights(kernel.op_type),
                                         &exec.trace));
  }
  exec.compute_cycles =
      (Rational(exec.output.num_elements()) * fn.cycles_per_element).Ceil();
  HSAFLOW_RETURN_IF_ERROR(Charge(CostCategory::kCompute,
                                 static_cast<uint64_t>(exec.compute_cycles),
                                 std::string(label)));
  return exec;
}

absl::Status Runtime::Charge(CostCategory category, uint64_t amount,
                             std::string detail) {
  std::lock_guard<std::mutex> lock(report_mu_);
  return report_.Charge(category, amount, std::move(detail));
}

metrics::TimelineReport Runtime::Report() const {
  std::lock_guard<std::mutex> lock(report_mu_);
  return report_;
}

size_t Runtime::EventCount() const {
  std::lock_guard<std::mutex> lock(report_mu_);
  return report_.events().size();
}

metrics::TimelineReport Runtime::ReportSince(size_t first_event) const {
  std::lock_guard<std::mutex> lock(report_mu_);
  return report_.Since(first_event);
}

}  // namespace hsaflow::hsa
