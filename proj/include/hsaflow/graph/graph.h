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

#ifndef HSAFLOW_GRAPH_GRAPH_H_
#define HSAFLOW_GRAPH_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "hsaflow/common/op_type.h"
#include "hsaflow/common/tensor.h"

namespace hsaflow::graph {

// Device type requested for a node by the graph author.
enum class DeviceAnnotation { kUnspecified, kCpu, kFpga };

enum class NodeKind { kInput, kConst, kOutput, kCompute };

struct TensorSpec {
  DType dtype = DType::kF32;
  Shape shape;
};

struct GraphNode {
  std::string id;
  NodeKind kind = NodeKind::kCompute;
  // Compute nodes only.
  OpType op_type = OpType::kCustom;
  std::string custom_name;
  std::vector<std::string> inputs;
  DeviceAnnotation annotation = DeviceAnnotation::kUnspecified;
  // CONST nodes: the constant. INPUT nodes: optional expected dtype/shape,
  // also used to synthesize inputs.
  std::optional<Tensor> value;
  std::optional<TensorSpec> spec;
};

// A validated dataflow DAG: unique ids, resolved inputs, per-op arity, and
// OUTPUT nodes with exactly one producer and no consumers.
class Graph {
 public:
  static absl::StatusOr<Graph> Build(std::vector<GraphNode> nodes);

  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const GraphNode* Find(std::string_view id) const;

  // Kahn order where, among ready nodes, the lexicographically smallest id
  // runs first.
  const std::vector<std::string>& topological_order() const { return order_; }

  std::vector<std::string> input_ids() const;
  std::vector<std::string> output_ids() const;

 private:
  std::vector<GraphNode> nodes_;
  std::map<std::string, size_t, std::less<>> index_;
  std::vector<std::string> order_;
};

// JSON document:
//
//   { "nodes": [
//       { "id": "x", "op": "INPUT", "attrs": {"dtype": "f32", "shape": [4, 4]} },
//       { "id": "w", "op": "CONST", "attrs": {"fill": "identity", "shape": [4, 4]} },
//       { "id": "b", "op": "CONST", "attrs": {"value": "f32 4: 0 0 0 0"} },
//       { "id": "fc", "op": "FC_F32", "inputs": ["x", "w", "b"], "device": "fpga" },
//       { "id": "y", "op": "OUTPUT", "inputs": ["fc"] } ] }
//
// "op" is INPUT, CONST, OUTPUT, a builtin op type name, or "custom:<name>".
// "device" is "fpga", "cpu" or null. CONST attrs hold either a tensor
// literal "value" or a "fill" of zeros / ones / identity / random (with
// "dtype", "shape", and for random a "seed" plus optional i16 "lo"/"hi").
absl::StatusOr<Graph> ParseGraph(std::string_view json_text);
absl::StatusOr<Graph> LoadGraph(const std::string& path);

// Seeded tensors for every INPUT node that declares a spec.
std::map<std::string, Tensor> SynthesizeInputs(const Graph& graph,
                                               uint32_t seed);

}  // namespace hsaflow::graph

#endif  // HSAFLOW_GRAPH_GRAPH_H_
