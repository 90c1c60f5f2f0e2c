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

#include "hsaflow/fpga/device.h"

#include <algorithm>

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/common/status_macros.h"

namespace hsaflow::fpga {
namespace {

absl::Status CapacityError(std::string_view what, const ResourceVector& need,
                           const ResourceVector& capacity) {
  const auto component = FirstExceeded(need, capacity);
  auto pick = [&](const ResourceVector& r) {
    if (*component == "lut") return r.lut;
    if (*component == "ff") return r.ff;
    if (*component == "bram") return r.bram;
    return r.dsp;
  };
  return errors::CapacityExceeded(hsaflow::StrCat(
      *component, " needs ", pick(need), " of ", pick(capacity), " (", what,
      ")"));
}

}  // namespace

Device::Device(DeviceConfig config)
    : config_(std::move(config)), mu_(std::make_unique<std::mutex>()) {
  regions_.resize(config_.num_regions);
  for (int i = 0; i < config_.num_regions; ++i) regions_[i].index = i;
}

Device::Device(Device&& other) noexcept = default;
Device& Device::operator=(Device&& other) noexcept = default;

absl::StatusOr<Device> Device::Create(DeviceConfig config) {
  if (config.num_regions < 1) {
    return errors::ConfigError(hsaflow::StrCat(
        config.name, ": region count must be >= 1, got ", config.num_regions));
  }
  if (!config.shell.NonNegative() || !config.capacity.NonNegative()) {
    return errors::ConfigError(
        hsaflow::StrCat(config.name, ": resource counts must be >= 0"));
  }
  if (!config.shell.FitsWithin(config.capacity)) {
    return CapacityError("shell", config.shell, config.capacity);
  }
  return Device(std::move(config));
}

absl::Status Device::InstallRole(Role role) {
  if (roles_.contains(role.id)) {
    return absl::AlreadyExistsError(
        hsaflow::StrCat("role '", role.id, "' already installed"));
  }
  if (!role.footprint.NonNegative()) {
    return errors::ConfigError(
        hsaflow::StrCat("role '", role.id, "' has a negative footprint"));
  }
  const ResourceVector need = config_.shell + role.footprint;
  if (!need.FitsWithin(config_.capacity)) {
    return CapacityError(hsaflow::StrCat("role ", role.id, " beside shell"), need,
                         config_.capacity);
  }
  if (role.cycles_per_element < Rational(0)) {
    return errors::ConfigError(
        hsaflow::StrCat("role '", role.id, "' has negative cycles_per_element"));
  }
  std::string id = role.id;
  roles_.emplace(std::move(id), std::move(role));
  return absl::OkStatus();
}

const Role* Device::FindRole(std::string_view role_id) const {
  auto it = roles_.find(role_id);
  return it == roles_.end() ? nullptr : &it->second;
}

ResourceVector Device::Used() const {
  ResourceVector used = config_.shell;
  for (const Region& region : regions_) {
    if (region.loaded) used = used + roles_.find(*region.loaded)->second.footprint;
  }
  return used;
}

absl::Status Device::CheckResources(const Role& role) const {
  const ResourceVector need = Used() + role.footprint;
  if (!need.FitsWithin(config_.capacity)) {
    return CapacityError(hsaflow::StrCat("loading ", role.id), need,
                         config_.capacity);
  }
  return absl::OkStatus();
}

std::optional<int> Device::RegionHolding(std::string_view role_id) const {
  for (const Region& region : regions_) {
    if (region.loaded && *region.loaded == role_id) return region.index;
  }
  return std::nullopt;
}

std::vector<std::string> Device::LoadedRoles() const {
  std::vector<std::string> loaded;
  for (const Region& region : regions_) {
    if (region.loaded) loaded.push_back(*region.loaded);
  }
  std::sort(loaded.begin(), loaded.end());
  return loaded;
}

absl::StatusOr<LoadResult> Device::Load(const Role& role) {
  // Lowest-index empty region first.
  auto empty = std::find_if(regions_.begin(), regions_.end(),
                            [](const Region& r) { return !r.loaded; });
  if (empty != regions_.end()) {
    HSAFLOW_RETURN_IF_ERROR(CheckResources(role));
    empty->loaded = role.id;
    Touch(*empty);
    return LoadResult{empty->index, true, std::nullopt};
  }

  // Stamps are unique, so the minimum is unambiguous.
  auto victim = std::min_element(
      regions_.begin(), regions_.end(),
      [](const Region& a, const Region& b) { return a.last_use < b.last_use; });
  const Role& evicted = roles_.find(*victim->loaded)->second;
  const ResourceVector need = Used() - evicted.footprint + role.footprint;
  if (!need.FitsWithin(config_.capacity)) {
    return CapacityError(
        hsaflow::StrCat("loading ", role.id, " after evicting ", evicted.id), need,
        config_.capacity);
  }
  LoadResult result{victim->index, true, *victim->loaded};
  victim->loaded = role.id;
  Touch(*victim);
  return result;
}

absl::StatusOr<LoadResult> Device::EnsureLoaded(std::string_view role_id) {
  const Role* role = FindRole(role_id);
  if (role == nullptr) {
    return errors::UnknownRole(hsaflow::StrCat("role '", role_id,
                                            "' is not installed on ",
                                            config_.name));
  }
  if (auto held = RegionHolding(role_id)) {
    Touch(regions_[*held]);
    ++hit_count_;
    return LoadResult{*held, false, std::nullopt};
  }
  HSAFLOW_ASSIGN_OR_RETURN(LoadResult result, Load(*role));
  ++reconfig_count_;
  return result;
}

absl::Status Device::Preload(std::string_view role_id) {
  const Role* role = FindRole(role_id);
  if (role == nullptr) {
    return errors::UnknownRole(hsaflow::StrCat("role '", role_id,
                                            "' is not installed on ",
                                            config_.name));
  }
  if (RegionHolding(role_id)) return absl::OkStatus();
  return Load(*role).status();
}

absl::StatusOr<RoleExecution> Device::ExecuteRole(
    int region, std::string_view role_id, std::span<const Tensor> args) {
  if (region < 0 || region >= static_cast<int>(regions_.size())) {
    return absl::OutOfRangeError(
        hsaflow::StrCat("region ", region, " does not exist on ", config_.name));
  }
  Region& slot = regions_[region];
  if (!slot.loaded || *slot.loaded != role_id) {
    return errors::RoleNotLoaded(hsaflow::StrCat(
        "region ", region, " holds ", slot.loaded ? *slot.loaded : "nothing",
        ", not ", role_id));
  }
  const Role& role = roles_.find(role_id)->second;

  RoleExecution exec;
  if (role.op_type == OpType::kCustom) {
    if (!role.custom_fn) {
      return absl::FailedPreconditionError(
          hsaflow::StrCat("custom role '", role.id, "' has no kernel body"));
    }
    HSAFLOW_ASSIGN_OR_RETURN(exec.output, role.custom_fn(args));
  } else {
    HSAFLOW_ASSIGN_OR_RETURN(
        exec.output,
        kernels::RunBuiltin(role.op_type, args,
                            role.weights ? &*role.weights : nullptr,
                            &exec.trace));
  }
  exec.elements = exec.output.num_elements();
  exec.compute_cycles =
      (Rational(exec.elements) * role.cycles_per_element).Ceil();
  Touch(slot);
  return exec;
}

}  // namespace hsaflow::fpga
