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

#include "psteiner/mixed_graph.hpp"

#include <stdexcept>
#include <string>

namespace psteiner {

void MixedGraph::require_vertex(VertexId v) const {
  if (v < 0 || v >= num_vertices())
    throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

VertexId MixedGraph::add_vertex(std::string label, std::optional<Point> pos) {
  vertices_.push_back(Vertex{std::move(label), pos});
  return static_cast<VertexId>(vertices_.size()) - 1;
}

void MixedGraph::add_arc(VertexId tail, VertexId head) {
  require_vertex(tail);
  require_vertex(head);
  arcs_.push_back(Arc{tail, head});
}

EdgeId MixedGraph::add_edge(VertexId u, VertexId w) {
  require_vertex(u);
  require_vertex(w);
  if (u == w)
    throw std::invalid_argument("undirected self-loop at vertex " +
                                std::to_string(u));
  edges_.push_back(UndirectedEdge{u, w});
  return static_cast<EdgeId>(edges_.size()) - 1;
}

const Vertex& MixedGraph::vertex(VertexId v) const {
  require_vertex(v);
  return vertices_[static_cast<size_t>(v)];
}

const UndirectedEdge& MixedGraph::edge(EdgeId e) const {
  if (e < 0 || e >= num_edges())
    throw std::invalid_argument("unknown edge id " + std::to_string(e));
  return edges_[static_cast<size_t>(e)];
}

VertexId MixedGraph::vertex_by_label(std::string_view label) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].label == label) return static_cast<VertexId>(i);
  return -1;
}

EdgeState PartialOrientation::state(EdgeId e) const {
  if (e < 0 || e >= size())
    throw std::invalid_argument("edge id out of range: " + std::to_string(e));
  return states_[static_cast<size_t>(e)];
}

void PartialOrientation::set(EdgeId e, EdgeState s) {
  if (e < 0 || e >= size())
    throw std::invalid_argument("edge id out of range: " + std::to_string(e));
  states_[static_cast<size_t>(e)] = s;
}

bool PartialOrientation::total() const {
  for (EdgeState s : states_)
    if (s == EdgeState::Unset) return false;
  return true;
}

EdgeId PartialOrientation::first_unset() const {
  for (size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == EdgeState::Unset) return static_cast<EdgeId>(i);
  return -1;
}

std::string PartialOrientation::to_string() const {
  std::string out;
  out.reserve(states_.size());
  for (EdgeState s : states_) {
    switch (s) {
      case EdgeState::Unset: out.push_back('U'); break;
      case EdgeState::Forward: out.push_back('F'); break;
      case EdgeState::Reverse: out.push_back('R'); break;
    }
  }
  return out;
}

PartialOrientation PartialOrientation::from_string(std::string_view chars) {
  PartialOrientation p(static_cast<int>(chars.size()));
  for (size_t i = 0; i < chars.size(); ++i) {
    switch (chars[i]) {
      case 'U': break;
      case 'F': p.set(static_cast<EdgeId>(i), EdgeState::Forward); break;
      case 'R': p.set(static_cast<EdgeId>(i), EdgeState::Reverse); break;
      default:
        throw std::invalid_argument(std::string("bad orientation character '") +
                                    chars[i] + "'");
    }
  }
  return p;
}

Instance::Instance(MixedGraph graph, std::vector<TerminalPair> pairs)
    : graph_(std::move(graph)), pairs_(std::move(pairs)) {
  for (size_t i = 0; i < pairs_.size(); ++i) {
    const TerminalPair& p = pairs_[i];
    graph_.require_vertex(p.source);
    graph_.require_vertex(p.target);
    if (p.source == p.target)
      throw std::invalid_argument("degenerate terminal pair " +
                                  std::to_string(i) + " (source == target)");
  }
}

}  // namespace psteiner
