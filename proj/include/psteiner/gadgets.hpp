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

#include <string>
#include <vector>

#include "psteiner/formula.hpp"
#include "psteiner/mixed_graph.hpp"

namespace psteiner {

enum class GadgetKind { Flip, Variable, Clause3, Clause2, Edge };

std::string to_string(GadgetKind kind);

// An undirected edge offered for identification with a neighboring gadget's
// edge during stitching. The left/right endpoint tags pin the geometric
// direction convention: every port edge is stored left-to-right, so Forward
// always means "directed rightward".
struct Port {
  std::string name;
  EdgeId edge = -1;
  VertexId left = -1;
  VertexId right = -1;
};

// A gadget as a standalone mixed-graph fragment.
struct GadgetGraph {
  MixedGraph graph;
  std::vector<TerminalPair> pairs;
  std::vector<Port> ports;
};

// The gadget viewed as a self-contained Steiner Orientation instance.
Instance to_instance(const GadgetGraph& gadget);

// The two-pair primitive that forces its two red edges antiparallel.
// 8 vertices, 8 arcs, 2 edges (both ports "top"/"bottom"), 2 pairs.
GadgetGraph build_flip();

// Variable gadget with p positive and n negative occurrence edges. Top chain
// carries ports pos1..pos<p> left to right, bottom chain neg1..neg<n>.
// Exactly two solving orientations: all top edges rightward + bottom leftward
// (clockwise = TRUE) or the reverse (counterclockwise = FALSE).
// Throws std::invalid_argument unless p >= 1 and n >= 1.
GadgetGraph build_variable(int positive_occurrences,
                           int negative_occurrences);

// Three-literal clause gadget; ports "ex", "ey", "ez" are the literal edges,
// left to right. Solvable iff at least one port edge is directed rightward.
// side == Negative mirrors all coordinates vertically (adjacency identical).
GadgetGraph build_clause3(Side side);

// Two-literal variant: the middle flip is removed and its synchronizing edge
// becomes a plain arc. Ports "ex", "ez".
GadgetGraph build_clause2(Side side);

// Two stacked flips sharing a middle edge; ports "A" (top) and "B" (bottom)
// end up identified with a variable edge and a clause edge. Solvable iff A
// and B are parallel (the middle edge then opposes both).
GadgetGraph build_edge_gadget();

}  // namespace psteiner
