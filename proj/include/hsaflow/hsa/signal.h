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

#ifndef HSAFLOW_HSA_SIGNAL_H_
#define HSAFLOW_HSA_SIGNAL_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>

#include "absl/status/statusor.h"

namespace hsaflow::hsa {

// Completion counter. Created with the number of expected completions and
// decremented once per retired packet.
class Signal {
 public:
  explicit Signal(int64_t initial) : value_(initial) {}

  Signal(const Signal&) = delete;
  Signal& operator=(const Signal&) = delete;

  int64_t Load() const;
  void Decrement();
  // Number of Decrement() calls so far.
  int64_t retirements() const;

  // Blocks until the value is <= at_most, returning the observed value, or
  // fails with Timeout. Never modifies the signal.
  absl::StatusOr<int64_t> WaitLessEqual(int64_t at_most,
                                        std::chrono::microseconds timeout) const;

 private:
  mutable std::mutex mu_;
  mutable std::condition_variable cv_;
  int64_t value_;
  int64_t retirements_ = 0;
};

using SignalHandle = std::shared_ptr<Signal>;

}  // namespace hsaflow::hsa

#endif  // HSAFLOW_HSA_SIGNAL_H_
