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

#include "hsaflow/hsa/registry.h"

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"

namespace hsaflow::hsa {

std::string_view AgentKindName(AgentKind kind) {
  return kind == AgentKind::kCpu ? "cpu" : "fpga";
}

std::optional<AgentKind> ParseAgentKind(std::string_view name) {
  if (name == "cpu") return AgentKind::kCpu;
  if (name == "fpga") return AgentKind::kFpga;
  return std::nullopt;
}

absl::StatusOr<KernelId> KernelRegistry::Register(KernelObject kernel) {
  const bool is_role = std::holds_alternative<BitstreamRole>(kernel.body);
  if ((kernel.device_kind == AgentKind::kFpga) != is_role) {
    return errors::VariantMismatch(hsaflow::StrCat(
        OpTypeName(kernel.op_type), " for ", AgentKindName(kernel.device_kind),
        " must be a ", kernel.device_kind == AgentKind::kFpga
                           ? "bitstream role"
                           : "software function"));
  }
  if (kernel.op_type != OpType::kCustom) kernel.custom_name.clear();
  Key key{kernel.op_type, kernel.device_kind, kernel.custom_name};
  if (by_key_.contains(key)) {
    return errors::DuplicateRegistration(hsaflow::StrCat(
        OpTypeName(kernel.op_type),
        kernel.custom_name.empty() ? "" : hsaflow::StrCat(":", kernel.custom_name),
        "/", AgentKindName(kernel.device_kind), " is already registered"));
  }
  kernel.id = next_id_++;
  by_id_.emplace(kernel.id, key);
  const KernelId id = kernel.id;
  by_key_.emplace(std::move(key), std::move(kernel));
  return id;
}

const KernelObject* KernelRegistry::Lookup(OpType op_type,
                                           AgentKind device_kind,
                                           std::string_view custom_name) const {
  auto it = by_key_.find(Key{
      op_type, device_kind,
      op_type == OpType::kCustom ? std::string(custom_name) : std::string()});
  return it == by_key_.end() ? nullptr : &it->second;
}

const KernelObject* KernelRegistry::Find(KernelId id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return nullptr;
  return &by_key_.at(it->second);
}

void KernelRegistry::Clear(AgentKind kind) {
  for (auto it = by_key_.begin(); it != by_key_.end();) {
    if (std::get<1>(it->first) == kind) {
      by_id_.erase(it->second.id);
      it = by_key_.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace hsaflow::hsa
