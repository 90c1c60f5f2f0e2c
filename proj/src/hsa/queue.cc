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

#include "hsaflow/hsa/queue.h"

namespace hsaflow::hsa {

Queue::Queue(int id, Agent agent, uint32_t depth)
    : id_(id), agent_(std::move(agent)), depth_(depth) {}

size_t Queue::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return pending_.size();
}

bool Queue::destroyed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return destroyed_;
}

uint64_t Queue::write_index() const {
  std::lock_guard<std::mutex> lock(mu_);
  return write_index_;
}

uint64_t Queue::read_index() const {
  std::lock_guard<std::mutex> lock(mu_);
  return read_index_;
}

Queue::PushResult Queue::TryPush(
    DispatchPacket& packet,
    const std::function<void(DispatchPacket&)>& on_accept) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (destroyed_) return PushResult::kDestroyed;
    if (pending_.size() >= depth_) return PushResult::kFull;
    if (on_accept) on_accept(packet);
    pending_.push_back(std::move(packet));
    ++write_index_;
  }
  not_empty_.notify_one();
  return PushResult::kAccepted;
}

Queue::PushResult Queue::PushBlocking(
    DispatchPacket& packet,
    const std::function<void(DispatchPacket&)>& on_accept) {
  {
    std::unique_lock<std::mutex> lock(mu_);
    not_full_.wait(lock,
                   [&] { return destroyed_ || pending_.size() < depth_; });
    if (destroyed_) return PushResult::kDestroyed;
    if (on_accept) on_accept(packet);
    pending_.push_back(std::move(packet));
    ++write_index_;
  }
  not_empty_.notify_one();
  return PushResult::kAccepted;
}

std::optional<DispatchPacket> Queue::TryPop() {
  std::optional<DispatchPacket> packet;
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (pending_.empty()) return std::nullopt;
    packet = std::move(pending_.front());
    pending_.pop_front();
    ++read_index_;
  }
  not_full_.notify_one();
  return packet;
}

std::optional<DispatchPacket> Queue::PopBlocking() {
  std::optional<DispatchPacket> packet;
  {
    std::unique_lock<std::mutex> lock(mu_);
    not_empty_.wait(lock, [&] { return destroyed_ || !pending_.empty(); });
    if (pending_.empty()) return std::nullopt;
    packet = std::move(pending_.front());
    pending_.pop_front();
    ++read_index_;
  }
  not_full_.notify_one();
  return packet;
}

std::optional<uint64_t> Queue::HeadSequence() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (pending_.empty()) return std::nullopt;
  return pending_.front().sequence;
}

void Queue::Destroy() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    destroyed_ = true;
  }
  not_full_.notify_all();
  not_empty_.notify_all();
}

}  // namespace hsaflow::hsa
