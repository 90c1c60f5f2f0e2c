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

#include "hsaflow/common/op_type.h"

namespace hsaflow {

std::string_view OpTypeName(OpType op) {
  switch (op) {
    case OpType::kFcF32:
      return "FC_F32";
    case OpType::kFcF32Barrier:
      return "FC_F32_BARRIER";
    case OpType::kConv5x5I16:
      return "CONV5x5_I16";
    case OpType::kConv3x3x2I16:
      return "CONV3x3x2_I16";
    case OpType::kCustom:
      return "CUSTOM";
  }
  return "CUSTOM";
}

std::optional<OpType> ParseOpType(std::string_view name) {
  for (OpType op : {OpType::kFcF32, OpType::kFcF32Barrier, OpType::kConv5x5I16,
                    OpType::kConv3x3x2I16, OpType::kCustom}) {
    if (name == OpTypeName(op)) return op;
  }
  return std::nullopt;
}

}  // namespace hsaflow
