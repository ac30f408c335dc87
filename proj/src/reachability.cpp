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

#include "psteiner/reachability.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace psteiner {

namespace {

void check_lengths(const MixedGraph& graph, const PartialOrientation& partial) {
  if (partial.size() != graph.num_edges()) {
    throw std::invalid_argument("orientation length " +
                                std::to_string(partial.size()) +
                                " does not match edge count " +
                                std::to_string(graph.num_edges()));
  }
}

}  // namespace

std::vector<VertexId> reachable_set(const MixedGraph& graph,
                                    const PartialOrientation& partial,
                                    VertexId start, bool relaxed) {
  graph.require_vertex(start);
  check_lengths(graph, partial);

  // Adjacency is rebuilt per call; callers that need repeated queries on a
  // fixed graph (the solver) keep their own incremental structure instead.
  std::vector<std::vector<VertexId>> out(
      static_cast<std::size_t>(graph.num_vertices()));
  for (const Arc& a : graph.arcs()) {
    out[static_cast<std::size_t>(a.tail)].push_back(a.head);
  }
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const UndirectedEdge& ue = graph.edge(e);
    switch (partial.state(e)) {
      case EdgeState::Forward:
        out[static_cast<std::size_t>(ue.u)].push_back(ue.w);
        break;
      case EdgeState::Reverse:
        out[static_cast<std::size_t>(ue.w)].push_back(ue.u);
        break;
      case EdgeState::Unset:
        if (relaxed) {
          out[static_cast<std::size_t>(ue.u)].push_back(ue.w);
          out[static_cast<std::size_t>(ue.w)].push_back(ue.u);
        }
        break;
    }
  }

  std::vector<char> seen(static_cast<std::size_t>(graph.num_vertices()), 0);
  std::queue<VertexId> frontier;
  seen[static_cast<std::size_t>(start)] = 1;
  frontier.push(start);
  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop();
    for (VertexId nxt : out[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(nxt)]) {
        seen[static_cast<std::size_t>(nxt)] = 1;
        frontier.push(nxt);
      }
    }
  }

  std::vector<VertexId> result;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) result.push_back(v);
  }
  return result;  // ascending by construction
}

bool verify_orientation(const Instance& instance,
                        const PartialOrientation& orientation) {
  check_lengths(instance.graph(), orientation);
  if (!orientation.total()) {
    throw std::invalid_argument("verify_orientation requires a total orientation");
  }
  for (const TerminalPair& tp : instance.pairs()) {
    // relaxed=false: with a total orientation there is nothing to relax.
    std::vector<VertexId> reach =
        reachable_set(instance.graph(), orientation, tp.source, false);
    if (!std::binary_search(reach.begin(), reach.end(), tp.target)) {
      return false;
    }
  }
  return true;
}

std::vector<SourceSinkViolation> check_source_sink_property(
    const Instance& instance) {
  const MixedGraph& g = instance.graph();
  std::vector<int> arc_in(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<int> arc_out(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<int> und(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Arc& a : g.arcs()) {
    ++arc_out[static_cast<std::size_t>(a.tail)];
    ++arc_in[static_cast<std::size_t>(a.head)];
  }
  for (const UndirectedEdge& e : g.edges()) {
    ++und[static_cast<std::size_t>(e.u)];
    ++und[static_cast<std::size_t>(e.w)];
  }

  std::vector<SourceSinkViolation> violations;
  for (int i = 0; i < static_cast<int>(instance.pairs().size()); ++i) {
    const TerminalPair& tp = instance.pairs()[static_cast<std::size_t>(i)];
    int in_deg = arc_in[static_cast<std::size_t>(tp.source)] +
                 und[static_cast<std::size_t>(tp.source)];
    if (in_deg > 0) {
      violations.push_back({i, tp.source, ViolationKind::SourceHasIndegree,
                            in_deg});
    }
    int out_deg = arc_out[static_cast<std::size_t>(tp.target)] +
                  und[static_cast<std::size_t>(tp.target)];
    if (out_deg > 0) {
      violations.push_back({i, tp.target, ViolationKind::TargetHasOutdegree,
                            out_deg});
    }
  }
  return violations;
}

}  // namespace psteiner
