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

#ifndef HSAFLOW_HSA_REGISTRY_H_
#define HSAFLOW_HSA_REGISTRY_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>

#include "absl/status/statusor.h"
#include "hsaflow/common/op_type.h"
#include "hsaflow/common/rational.h"
#include "hsaflow/fpga/resources.h"
#include "hsaflow/hsa/agent.h"
#include "hsaflow/kernels/kernels.h"

namespace hsaflow::hsa {

using KernelId = int64_t;

// Host implementation. Builtin op types run the shared reference kernels;
// kCustom kernels supply `fn`.
struct SoftwareFn {
  std::string function_id;
  Rational cycles_per_element{1};
  kernels::KernelFn fn;
};

// Presynthesized bitstream loaded into an FPGA region on demand.
struct BitstreamRole {
  std::string role_id;
  fpga::ResourceVector footprint;
  Rational cycles_per_op{1};
};

struct KernelObject {
  KernelId id = 0;
  OpType op_type = OpType::kCustom;
  // Part of the registry key for kCustom kernels; empty otherwise.
  std::string custom_name;
  AgentKind device_kind = AgentKind::kCpu;
  std::variant<SoftwareFn, BitstreamRole> body;
};

// Maps (op_type, device_kind) to at most one kernel. FPGA kernels must be
// bitstream roles and CPU kernels software functions.
class KernelRegistry {
 public:
  // Assigns and returns the kernel's id. DuplicateRegistration when the key
  // is taken; VariantMismatch when the body does not suit the device kind.
  absl::StatusOr<KernelId> Register(KernelObject kernel);

  // nullptr when nothing is registered under the key (callers fall back).
  const KernelObject* Lookup(OpType op_type, AgentKind device_kind,
                             std::string_view custom_name = "") const;
  const KernelObject* Find(KernelId id) const;

  // Drops every kernel registered for `kind`.
  void Clear(AgentKind kind);
  size_t size() const { return by_key_.size(); }

 private:
  using Key = std::tuple<OpType, AgentKind, std::string>;

  std::map<Key, KernelObject> by_key_;
  std::map<KernelId, Key> by_id_;
  KernelId next_id_ = 1;
};

}  // namespace hsaflow::hsa

#endif  // HSAFLOW_HSA_REGISTRY_H_
