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

#ifndef HSAFLOW_HSA_AGENT_H_
#define HSAFLOW_HSA_AGENT_H_

#include <optional>
#include <string>
#include <string_view>

#include "hsaflow/fpga/resources.h"

namespace hsaflow::hsa {

enum class AgentKind { kCpu, kFpga };

std::string_view AgentKindName(AgentKind kind);  // "cpu" / "fpga"
std::optional<AgentKind> ParseAgentKind(std::string_view name);

// A dispatch target. CPU agents have zero capacity.
struct Agent {
  std::string id;
  AgentKind kind = AgentKind::kCpu;
  std::string name;
  fpga::ResourceVector capacity;

  friend bool operator==(const Agent&, const Agent&) = default;
};

}  // namespace hsaflow::hsa

#endif  // HSAFLOW_HSA_AGENT_H_
