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

#ifndef HSAFLOW_HSA_QUEUE_H_
#define HSAFLOW_HSA_QUEUE_H_

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "hsaflow/common/tensor.h"
#include "hsaflow/hsa/agent.h"
#include "hsaflow/hsa/registry.h"
#include "hsaflow/hsa/signal.h"
#include "hsaflow/kernels/kernels.h"

namespace hsaflow::hsa {

// What a submit does when the queue already holds `depth` packets.
enum class QueuePolicy { kBlock, kError };

// Filled in when a packet retires.
struct PacketResult {
  absl::Status status;
  Tensor output;
  int64_t compute_cycles = 0;
  kernels::KernelTrace trace;
  // FPGA packets only.
  int region = -1;
  bool reconfigured = false;
};

struct DispatchPacket {
  KernelId kernel = 0;
  std::vector<Tensor> args;
  SignalHandle completion;
  // Label for cost events (the graph node id, for instance).
  std::string label;
  // Written by the runtime.
  uint64_t enqueue_time_us = 0;
  uint64_t sequence = 0;
  std::shared_ptr<PacketResult> result = std::make_shared<PacketResult>();
};

// Bounded in-order packet FIFO bound to one agent. Producers serialize on an
// internal lock, which gives concurrent submitters a total order.
class Queue {
 public:
  Queue(int id, Agent agent, uint32_t depth);

  Queue(const Queue&) = delete;
  Queue& operator=(const Queue&) = delete;

  int id() const { return id_; }
  const Agent& agent() const { return agent_; }
  uint32_t depth() const { return depth_; }
  size_t size() const;
  bool destroyed() const;

  // Appends unless full or destroyed. `on_accept` runs under the queue lock
  // just before the packet becomes visible to consumers.
  enum class PushResult { kAccepted, kFull, kDestroyed };
  PushResult TryPush(DispatchPacket& packet,
                     const std::function<void(DispatchPacket&)>& on_accept);
  // Waits for room; kFull is never returned.
  PushResult PushBlocking(DispatchPacket& packet,
                          const std::function<void(DispatchPacket&)>& on_accept);

  std::optional<DispatchPacket> TryPop();
  // Waits for a packet; nullopt once destroyed and drained.
  std::optional<DispatchPacket> PopBlocking();
  std::optional<uint64_t> HeadSequence() const;

  // Packets accepted / removed over the queue's lifetime.
  uint64_t write_index() const;
  uint64_t read_index() const;

  void Destroy();

 private:
  const int id_;
  const Agent agent_;
  const uint32_t depth_;

  mutable std::mutex mu_;
  std::condition_variable not_full_;
  std::condition_variable not_empty_;
  std::deque<DispatchPacket> pending_;
  uint64_t write_index_ = 0;
  uint64_t read_index_ = 0;
  bool destroyed_ = false;
};

}  // namespace hsaflow::hsa

#endif  // HSAFLOW_HSA_QUEUE_H_
