// Copyright 2026 The psteiner Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psteiner {

using VertexId = int;
using EdgeId = int;

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct Vertex {
  std::string label;         // optional; empty means unlabeled
  std::optional<Point> pos;  // optional drawing coordinates
  bool operator==(const Vertex&) const = default;
};

struct Arc {
  VertexId tail = -1;
  VertexId head = -1;
  bool operator==(const Arc&) const = default;
};

// Undirected edge awaiting an orientation. The stored endpoint order is
// significant: Forward means u -> w, Reverse means w -> u.
struct UndirectedEdge {
  VertexId u = -1;
  VertexId w = -1;
  bool operator==(const UndirectedEdge&) const = default;
};

// A graph with both fixed arcs and orientable undirected edges. Vertices and
// edges get dense ids in insertion order and are never removed; parallel arcs
// and antiparallel arc pairs are allowed, undirected self-loops are not.
class MixedGraph {
 public:
  VertexId add_vertex(std::string label = {}, std::optional<Point> pos = {});
  void add_arc(VertexId tail, VertexId head);
  EdgeId add_edge(VertexId u, VertexId w);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Vertex& vertex(VertexId v) const;
  const UndirectedEdge& edge(EdgeId e) const;
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<UndirectedEdge>& edges() const { return edges_; }

  // First vertex carrying the given label, or -1.
  VertexId vertex_by_label(std::string_view label) const;

  void require_vertex(VertexId v) const;

  bool operator==(const MixedGraph&) const = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<UndirectedEdge> edges_;
};

enum class EdgeState : unsigned char { Unset, Forward, Reverse };

constexpr EdgeState opposite(EdgeState s) {
  if (s == EdgeState::Forward) return EdgeState::Reverse;
  if (s == EdgeState::Reverse) return EdgeState::Forward;
  return EdgeState::Unset;
}

// Assignment of states to the undirected edges of one graph, indexed by edge
// id. "Total" means no edge is left Unset.
class PartialOrientation {
 public:
  PartialOrientation() = default;
  explicit PartialOrientation(int num_edges)
      : states_(static_cast<size_t>(num_edges), EdgeState::Unset) {}

  int size() const { return static_cast<int>(states_.size()); }
  EdgeState state(EdgeId e) const;
  void set(EdgeId e, EdgeState s);
  bool total() const;
  // Lowest-id Unset edge, or -1 when total.
  EdgeId first_unset() const;

  // Compact text form, one character per edge: F, R or U.
  std::string to_string() const;
  static PartialOrientation from_string(std::string_view chars);

  bool operator==(const PartialOrientation&) const = default;

 private:
  std::vector<EdgeState> states_;
};

struct TerminalPair {
  VertexId source = -1;
  VertexId target = -1;
  bool operator==(const TerminalPair&) const = default;
};

// A mixed graph plus the terminal pairs that must be connected after
// orienting the undirected edges. Construction validates that pair endpoints
// exist and that no pair is degenerate (source == target).
class Instance {
 public:
  Instance(MixedGraph graph, std::vector<TerminalPair> pairs);

  const MixedGraph& graph() const { return graph_; }
  const std::vector<TerminalPair>& pairs() const { return pairs_; }

  bool operator==(const Instance&) const = default;

 private:
  MixedGraph graph_;
  std::vector<TerminalPair> pairs_;
};

}  // namespace psteiner
