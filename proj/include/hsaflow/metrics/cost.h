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

#ifndef HSAFLOW_METRICS_COST_H_
#define HSAFLOW_METRICS_COST_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace hsaflow::metrics {

// Which software layer dispatches are issued from. The two layers carry
// different setup and per-dispatch costs and are never combined.
enum class Layer { kTf, kHsa };

std::string_view LayerName(Layer layer);  // "tf" / "hsa"
std::optional<Layer> ParseLayer(std::string_view name);

// Overhead constants in microseconds, measured on the reference board.
struct CostConstants {
  uint64_t setup_us_tf = 156230;
  uint64_t setup_us_hsa = 39032;
  uint64_t reconfig_us = 7424;
  uint64_t dispatch_us_tf = 27;
  uint64_t dispatch_us_hsa = 10;
  Layer layer = Layer::kTf;

  uint64_t setup_us() const {
    return layer == Layer::kTf ? setup_us_tf : setup_us_hsa;
  }
  uint64_t dispatch_us() const {
    return layer == Layer::kTf ? dispatch_us_tf : dispatch_us_hsa;
  }
};

}  // namespace hsaflow::metrics

#endif  // HSAFLOW_METRICS_COST_H_
