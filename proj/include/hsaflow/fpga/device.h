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

#ifndef HSAFLOW_FPGA_DEVICE_H_
#define HSAFLOW_FPGA_DEVICE_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "hsaflow/common/op_type.h"
#include "hsaflow/common/rational.h"
#include "hsaflow/common/tensor.h"
#include "hsaflow/fpga/resources.h"
#include "hsaflow/kernels/kernels.h"

namespace hsaflow::fpga {

// A presynthesized partial bitstream that can be loaded into one region.
struct Role {
  std::string id;
  OpType op_type = OpType::kCustom;
  // Distinguishes kCustom roles; empty for builtin op types.
  std::string custom_name;
  ResourceVector footprint;
  Rational cycles_per_element{1};
  std::string description;
  // Weights synthesized into conv roles.
  std::optional<kernels::FixedWeights> weights;
  // Body for kCustom roles.
  kernels::KernelFn custom_fn;
};

struct Region {
  int index = 0;
  std::optional<std::string> loaded;
  uint64_t last_use = 0;
};

struct DeviceConfig {
  std::string name = "fpga0";
  ResourceVector shell = kDefaultShell;
  ResourceVector capacity = kDefaultCapacity;
  int num_regions = 2;
};

struct LoadResult {
  int region = 0;
  bool reconfigured = false;
  // Role displaced to make room, if any.
  std::optional<std::string> evicted;
};

struct RoleExecution {
  Tensor output;
  int64_t elements = 0;
  int64_t compute_cycles = 0;
  kernels::KernelTrace trace;
};

// Virtual partially-reconfigurable FPGA: a static shell plus homogeneous
// regions that each hold at most one role. Roles are swapped in on demand
// and the least recently used region is evicted when all are occupied.
//
// Invariants maintained after every call:
//   * shell + footprints of loaded roles <= capacity, componentwise;
//   * no role is loaded in two regions;
//   * every touch stamps a region with a strictly larger last_use.
//
// Not internally synchronized; callers serialize access through mutex().
class Device {
 public:
  static absl::StatusOr<Device> Create(DeviceConfig config);

  Device(Device&& other) noexcept;
  Device& operator=(Device&& other) noexcept;

  // Makes `role` available for loading. Fails with CapacityExceeded when the
  // footprint cannot fit beside the shell even on an otherwise empty device.
  absl::Status InstallRole(Role role);
  const Role* FindRole(std::string_view role_id) const;

  // ok iff shell + loaded footprints + role.footprint <= capacity.
  absl::Status CheckResources(const Role& role) const;

  // Hit: touches the holding region. Miss: fills the lowest-index empty
  // region, else replaces the least recently used one.
  absl::StatusOr<LoadResult> EnsureLoaded(std::string_view role_id);

  // Loads a role as part of the initial full configuration: same placement
  // rules as EnsureLoaded but not counted as a reconfiguration.
  absl::Status Preload(std::string_view role_id);

  // Runs the role held by `region`. compute_cycles is
  // ceil(output elements * cycles_per_element).
  absl::StatusOr<RoleExecution> ExecuteRole(int region,
                                            std::string_view role_id,
                                            std::span<const Tensor> args);

  std::optional<int> RegionHolding(std::string_view role_id) const;
  // Loaded role ids, sorted.
  std::vector<std::string> LoadedRoles() const;
  ResourceVector Used() const;

  const DeviceConfig& config() const { return config_; }
  const std::vector<Region>& regions() const { return regions_; }
  int64_t reconfig_count() const { return reconfig_count_; }
  int64_t hit_count() const { return hit_count_; }
  std::mutex& mutex() const { return *mu_; }

 private:
  explicit Device(DeviceConfig config);

  absl::StatusOr<LoadResult> Load(const Role& role);
  void Touch(Region& region) { region.last_use = ++stamp_; }

  DeviceConfig config_;
  std::map<std::string, Role, std::less<>> roles_;
  std::vector<Region> regions_;
  int64_t reconfig_count_ = 0;
  int64_t hit_count_ = 0;
  uint64_t stamp_ = 0;
  std::unique_ptr<std::mutex> mu_;
};

}  // namespace hsaflow::fpga

#endif  // HSAFLOW_FPGA_DEVICE_H_
