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

#include "hsaflow/graph/graph.h"

#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "hsaflow/common/strings.h"
#include "absl/strings/str_join.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/common/status_macros.h"
#include "json.hpp"

namespace hsaflow::graph {
namespace {

using nlohmann::json;

std::string Where(size_t index, std::string_view id) {
  return id.empty() ? hsaflow::StrCat("nodes[", index, "]")
                    : hsaflow::StrCat("nodes[", index, "] '", id, "'");
}

// Expected input count, or -1 for any.
int Arity(const GraphNode& node) {
  switch (node.kind) {
    case NodeKind::kInput:
    case NodeKind::kConst:
      return 0;
    case NodeKind::kOutput:
      return 1;
    case NodeKind::kCompute:
      if (IsFullyConnected(node.op_type)) return 3;
      if (IsConv(node.op_type)) return 1;
      return -1;
  }
  return -1;
}

absl::StatusOr<DType> ParseDType(const json& attrs) {
  const std::string name = attrs.value("dtype", "f32");
  if (name == "f32") return DType::kF32;
  if (name == "i16") return DType::kI16;
  return absl::InvalidArgumentError(hsaflow::StrCat("unknown dtype '", name, "'"));
}

absl::StatusOr<Shape> ParseShape(const json& attrs) {
  if (!attrs.contains("shape") || !attrs.at("shape").is_array()) {
    return absl::InvalidArgumentError("missing 'shape' array");
  }
  Shape shape;
  for (const json& extent : attrs.at("shape")) {
    if (!extent.is_number_integer() || extent.get<int64_t>() <= 0) {
      return absl::InvalidArgumentError("shape extents must be positive");
    }
    shape.push_back(extent.get<int64_t>());
  }
  if (shape.empty()) return absl::InvalidArgumentError("empty shape");
  return shape;
}

absl::StatusOr<Tensor> ParseConst(const json& attrs) {
  if (attrs.contains("value")) {
    return ParseTensorLiteral(attrs.at("value").get<std::string>());
  }
  const std::string fill = attrs.value("fill", "");
  HSAFLOW_ASSIGN_OR_RETURN(const DType dtype, ParseDType(attrs));
  HSAFLOW_ASSIGN_OR_RETURN(const Shape shape, ParseShape(attrs));
  if (fill == "zeros") return Tensor::Zeros(dtype, shape);
  if (fill == "ones") {
    Tensor t = Tensor::Zeros(dtype, shape);
    if (dtype == DType::kF32) {
      for (float& v : t.mutable_f32()) v = 1.0f;
    } else {
      for (int16_t& v : t.mutable_i16()) v = 1;
    }
    return t;
  }
  if (fill == "identity") {
    if (dtype != DType::kF32 || shape.size() != 2 || shape[0] != shape[1]) {
      return absl::InvalidArgumentError("identity fill needs a square f32 shape");
    }
    return IdentityF32(shape[0]);
  }
  if (fill == "random") {
    const uint32_t seed = attrs.value("seed", 0u);
    if (dtype == DType::kF32) return RandomF32(shape, seed);
    return RandomI16(shape, seed, attrs.value("lo", int16_t{-32768}),
                     attrs.value("hi", int16_t{32767}));
  }
  return absl::InvalidArgumentError(
      "CONST needs a 'value' literal or a fill of zeros/ones/identity/random");
}

absl::StatusOr<GraphNode> ParseNode(const json& entry) {
  if (!entry.is_object()) {
    return absl::InvalidArgumentError("node must be an object");
  }
  GraphNode node;
  if (!entry.contains("id") || !entry.at("id").is_string()) {
    return absl::InvalidArgumentError("missing string 'id'");
  }
  node.id = entry.at("id").get<std::string>();
  const std::string op = entry.value("op", "");
  if (op == "INPUT") {
    node.kind = NodeKind::kInput;
  } else if (op == "CONST") {
    node.kind = NodeKind::kConst;
  } else if (op == "OUTPUT") {
    node.kind = NodeKind::kOutput;
  } else if (op.starts_with("custom:") && op.size() > 7) {
    node.op_type = OpType::kCustom;
    node.custom_name = op.substr(7);
  } else if (auto type = ParseOpType(op); type && *type != OpType::kCustom) {
    node.op_type = *type;
  } else {
    return absl::InvalidArgumentError(hsaflow::StrCat("unknown op '", op, "'"));
  }
  if (entry.contains("inputs")) {
    for (const json& input : entry.at("inputs")) {
      node.inputs.push_back(input.get<std::string>());
    }
  }
  if (entry.contains("device") && !entry.at("device").is_null()) {
    const std::string device = entry.at("device").get<std::string>();
    if (device == "fpga") {
      node.annotation = DeviceAnnotation::kFpga;
    } else if (device == "cpu") {
      node.annotation = DeviceAnnotation::kCpu;
    } else {
      return absl::InvalidArgumentError(
          hsaflow::StrCat("device must be \"fpga\", \"cpu\" or null, got '",
                       device, "'"));
    }
  }
  const json attrs = entry.value("attrs", json::object());
  if (node.kind == NodeKind::kConst) {
    HSAFLOW_ASSIGN_OR_RETURN(node.value, ParseConst(attrs));
  } else if (node.kind == NodeKind::kInput && attrs.contains("shape")) {
    TensorSpec spec;
    HSAFLOW_ASSIGN_OR_RETURN(spec.dtype, ParseDType(attrs));
    HSAFLOW_ASSIGN_OR_RETURN(spec.shape, ParseShape(attrs));
    node.spec = std::move(spec);
  }
  return node;
}

}  // namespace

absl::StatusOr<Graph> Graph::Build(std::vector<GraphNode> nodes) {
  Graph graph;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const GraphNode& node = nodes[i];
    if (node.id.empty()) {
      return errors::ParseError(hsaflow::StrCat(Where(i, ""), ": empty id"));
    }
    if (!graph.index_.emplace(node.id, i).second) {
      return errors::ParseError(
          hsaflow::StrCat(Where(i, node.id), ": duplicate node id"));
    }
  }
  std::map<std::string, int> consumers_of;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const GraphNode& node = nodes[i];
    const int arity = Arity(node);
    if (arity >= 0 && static_cast<int>(node.inputs.size()) != arity) {
      return errors::ParseError(hsaflow::StrCat(Where(i, node.id), ": expects ",
                                             arity, " inputs, got ",
                                             node.inputs.size()));
    }
    for (const std::string& input : node.inputs) {
      auto it = graph.index_.find(input);
      if (it == graph.index_.end()) {
        return errors::UnresolvedInput(hsaflow::StrCat(
            Where(i, node.id), ": input '", input, "' does not exist"));
      }
      if (nodes[it->second].kind == NodeKind::kOutput) {
        return errors::ParseError(hsaflow::StrCat(
            Where(i, node.id), ": consumes OUTPUT node '", input, "'"));
      }
    }
    if (node.kind == NodeKind::kConst && !node.value) {
      return errors::ParseError(
          hsaflow::StrCat(Where(i, node.id), ": CONST without a value"));
    }
  }

  // Kahn's algorithm; ready nodes leave in id order.
  std::map<std::string, int> pending;
  std::map<std::string, std::vector<std::string>> successors;
  for (const GraphNode& node : nodes) {
    pending[node.id] += 0;
    for (const std::string& input : node.inputs) {
      ++pending[node.id];
      successors[input].push_back(node.id);
    }
  }
  std::set<std::string> ready;
  for (const auto& [id, count] : pending) {
    if (count == 0) ready.insert(id);
  }
  while (!ready.empty()) {
    const std::string id = *ready.begin();
    ready.erase(ready.begin());
    graph.order_.push_back(id);
    for (const std::string& next : successors[id]) {
      if (--pending[next] == 0) ready.insert(next);
    }
  }
  if (graph.order_.size() != nodes.size()) {
    std::vector<std::string> stuck;
    for (const auto& [id, count] : pending) {
      if (count > 0) stuck.push_back(id);
    }
    return errors::CycleDetected(hsaflow::StrCat(
        "nodes on or behind a cycle: ", absl::StrJoin(stuck, ", ")));
  }
  graph.nodes_ = std::move(nodes);
  return graph;
}

const GraphNode* Graph::Find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

std::vector<std::string> Graph::input_ids() const {
  std::vector<std::string> ids;
  for (const std::string& id : order_) {
    if (Find(id)->kind == NodeKind::kInput) ids.push_back(id);
  }
  return ids;
}

std::vector<std::string> Graph::output_ids() const {
  std::vector<std::string> ids;
  for (const std::string& id : order_) {
    if (Find(id)->kind == NodeKind::kOutput) ids.push_back(id);
  }
  return ids;
}

absl::StatusOr<Graph> ParseGraph(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    return errors::ParseError(hsaflow::StrCat("byte ", e.byte, ": ", e.what()));
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.at("nodes").is_array()) {
    return errors::ParseError("expected an object with a 'nodes' array");
  }
  std::vector<GraphNode> nodes;
  size_t index = 0;
  for (const json& entry : doc.at("nodes")) {
    absl::StatusOr<GraphNode> node;
    try {
      node = ParseNode(entry);
    } catch (const json::exception& e) {
      node = absl::InvalidArgumentError(e.what());
    }
    if (!node.ok()) {
      std::string id;
      if (entry.is_object() && entry.contains("id") && entry.at("id").is_string()) {
        id = entry.at("id").get<std::string>();
      }
      return errors::ParseError(
          hsaflow::StrCat(Where(index, id), ": ", node.status().message()));
    }
    nodes.push_back(*std::move(node));
    ++index;
  }
  return Graph::Build(std::move(nodes));
}

absl::StatusOr<Graph> LoadGraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(hsaflow::StrCat("file not found: ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

std::map<std::string, Tensor> SynthesizeInputs(const Graph& graph,
                                               uint32_t seed) {
  std::map<std::string, Tensor> inputs;
  uint32_t stream = 0;
  for (const std::string& id : graph.input_ids()) {
    const GraphNode& node = *graph.Find(id);
    ++stream;
    if (!node.spec) continue;
    const uint32_t node_seed = seed * 1000003u + stream;
    inputs.emplace(id, node.spec->dtype == DType::kF32
                           ? RandomF32(node.spec->shape, node_seed)
                           : RandomI16(node.spec->shape, node_seed, -1024, 1023));
  }
  return inputs;
}

}  // namespace hsaflow::graph
