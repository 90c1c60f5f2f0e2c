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

#ifndef HSAFLOW_COMMON_OP_TYPE_H_
#define HSAFLOW_COMMON_OP_TYPE_H_

#include <optional>
#include <string_view>

namespace hsaflow {

// Compute operations a kernel can implement. The first four are the shipped
// accelerator roles; kCustom kernels are identified by an additional name.
enum class OpType {
  kFcF32,
  kFcF32Barrier,
  kConv5x5I16,
  kConv3x3x2I16,
  kCustom,
};

inline constexpr OpType kBuiltinOpTypes[] = {
    OpType::kFcF32, OpType::kFcF32Barrier, OpType::kConv5x5I16,
    OpType::kConv3x3x2I16};

// Canonical names: FC_F32, FC_F32_BARRIER, CONV5x5_I16, CONV3x3x2_I16, CUSTOM.
std::string_view OpTypeName(OpType op);
std::optional<OpType> ParseOpType(std::string_view name);

inline bool IsConv(OpType op) {
  return op == OpType::kConv5x5I16 || op == OpType::kConv3x3x2I16;
}
inline bool IsFullyConnected(OpType op) {
  return op == OpType::kFcF32 || op == OpType::kFcF32Barrier;
}

}  // namespace hsaflow

#endif  // HSAFLOW_COMMON_OP_TYPE_H_
