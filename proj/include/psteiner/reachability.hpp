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

#include <vector>

#include "psteiner/mixed_graph.hpp"

namespace psteiner {

// Vertices reachable from `start` under the given partial orientation,
// returned sorted ascending. Arcs are always traversable tail -> head; an
// oriented edge only in its chosen direction; an Unset edge is traversable
// both ways when `relaxed` is true and not at all otherwise.
std::vector<VertexId> reachable_set(const MixedGraph& graph,
                                    const PartialOrientation& partial,
                                    VertexId start, bool relaxed);

// True when the total orientation connects every terminal pair. Throws if the
// orientation is not total or its length does not match the graph.
bool verify_orientation(const Instance& instance,
                        const PartialOrientation& orientation);

enum class ViolationKind { SourceHasIndegree, TargetHasOutdegree };

struct SourceSinkViolation {
  int pair_index = -1;
  VertexId vertex = -1;
  ViolationKind kind = ViolationKind::SourceHasIndegree;
  // Offending degree: incoming arcs plus undirected incidences for a source,
  // outgoing arcs plus undirected incidences for a target.
  int degree = 0;
  bool operator==(const SourceSinkViolation&) const = default;
};

// Structural sanity check: in instances produced by the reduction, every
// source has indegree zero and every target outdegree zero, where an
// undirected edge incident to the terminal counts against it (some
// orientation would violate the degree). Returns all violations.
std::vector<SourceSinkViolation> check_source_sink_property(
    const Instance& instance);

}  // namespace psteiner
