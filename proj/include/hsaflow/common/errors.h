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

#ifndef HSAFLOW_COMMON_ERRORS_H_
#define HSAFLOW_COMMON_ERRORS_H_

#include <string_view>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "hsaflow/common/strings.h"

// Every error the runtime reports carries a stable tag as the message prefix
// ("CapacityExceeded: bram needs 240 of 216"), so callers can branch on the
// failure kind without parsing free text.
namespace hsaflow::errors {

inline absl::Status Tagged(absl::StatusCode code, std::string_view tag,
                           std::string_view detail) {
  return absl::Status(code, hsaflow::StrCat(tag, ": ", detail));
}

// True iff `status` is an error carrying `tag`.
inline bool Is(const absl::Status& status, std::string_view tag) {
  return !status.ok() && absl::StartsWith(status.message(), ToAbsl(tag)) &&
         status.message().size() > tag.size() &&
         status.message()[tag.size()] == ':';
}

#define HSAFLOW_DEFINE_ERROR(name, code)                    \
  inline absl::Status name(std::string_view detail) {       \
    return Tagged(absl::StatusCode::code, #name, detail); \
  }

// hsa_core
HSAFLOW_DEFINE_ERROR(UnknownAgent, kNotFound)
HSAFLOW_DEFINE_ERROR(InvalidDepth, kInvalidArgument)
HSAFLOW_DEFINE_ERROR(DuplicateRegistration, kAlreadyExists)
HSAFLOW_DEFINE_ERROR(VariantMismatch, kInvalidArgument)
HSAFLOW_DEFINE_ERROR(QueueFull, kResourceExhausted)
HSAFLOW_DEFINE_ERROR(QueueDestroyed, kFailedPrecondition)
HSAFLOW_DEFINE_ERROR(DeviceKindMismatch, kInvalidArgument)
HSAFLOW_DEFINE_ERROR(Timeout, kDeadlineExceeded)
HSAFLOW_DEFINE_ERROR(ConfigError, kInvalidArgument)

// fpga_device
HSAFLOW_DEFINE_ERROR(ZeroPercent, kInvalidArgument)
HSAFLOW_DEFINE_ERROR(CapacityExceeded, kResourceExhausted)
HSAFLOW_DEFINE_ERROR(RoleNotLoaded, kFailedPrecondition)
HSAFLOW_DEFINE_ERROR(UnknownRole, kNotFound)

// kernels
HSAFLOW_DEFINE_ERROR(ShapeMismatch, kInvalidArgument)

// graph_exec
HSAFLOW_DEFINE_ERROR(ParseError, kInvalidArgument)
HSAFLOW_DEFINE_ERROR(CycleDetected, kInvalidArgument)
HSAFLOW_DEFINE_ERROR(UnresolvedInput, kInvalidArgument)
HSAFLOW_DEFINE_ERROR(NoCpuKernel, kFailedPrecondition)
HSAFLOW_DEFINE_ERROR(MissingInput, kInvalidArgument)

// metrics
HSAFLOW_DEFINE_ERROR(DoubleSetup, kFailedPrecondition)
HSAFLOW_DEFINE_ERROR(ZeroCycles, kInvalidArgument)

#undef HSAFLOW_DEFINE_ERROR

}  // namespace hsaflow::errors

#endif  // HSAFLOW_COMMON_ERRORS_H_
