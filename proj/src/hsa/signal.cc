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

#include "hsaflow/hsa/signal.h"

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"

namespace hsaflow::hsa {

int64_t Signal::Load() const {
  std::lock_guard<std::mutex> lock(mu_);
  return value_;
}

int64_t Signal::retirements() const {
  std::lock_guard<std::mutex> lock(mu_);
  return retirements_;
}

void Signal::Decrement() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    --value_;
    ++retirements_;
  }
  cv_.notify_all();
}

absl::StatusOr<int64_t> Signal::WaitLessEqual(
    int64_t at_most, std::chrono::microseconds timeout) const {
  std::unique_lock<std::mutex> lock(mu_);
  if (!cv_.wait_for(lock, timeout, [&] { return value_ <= at_most; })) {
    return errors::Timeout(hsaflow::StrCat("signal value ", value_,
                                        " still above ", at_most, " after ",
                                        timeout.count(), " us"));
  }
  return value_;
}

}  // namespace hsaflow::hsa
