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

#ifndef HSAFLOW_COMMON_STATUS_MACROS_H_
#define HSAFLOW_COMMON_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define HSAFLOW_RETURN_IF_ERROR(expr)            \
  do {                                           \
    const absl::Status _hsaflow_status = (expr); \
    if (!_hsaflow_status.ok()) {                 \
      return _hsaflow_status;                    \
    }                                            \
  } while (0)

#define HSAFLOW_STATUS_CONCAT_INNER_(x, y) x##y
#define HSAFLOW_STATUS_CONCAT_(x, y) HSAFLOW_STATUS_CONCAT_INNER_(x, y)

#define HSAFLOW_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                                   \
  if (!statusor.ok()) {                                      \
    return statusor.status();                                \
  }                                                          \
  lhs = std::move(statusor).value()

#define HSAFLOW_ASSIGN_OR_RETURN(lhs, rexpr) \
  HSAFLOW_ASSIGN_OR_RETURN_IMPL_(            \
      HSAFLOW_STATUS_CONCAT_(_hsaflow_statusor_, __LINE__), lhs, rexpr)

#endif  // HSAFLOW_COMMON_STATUS_MACROS_H_
