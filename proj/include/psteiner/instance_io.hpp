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
#include <stdexcept>
#include <string>

#include "psteiner/mixed_graph.hpp"
#include "psteiner/reduction.hpp"

namespace psteiner {

// Parse failure for the instance and orientation text formats; line() is
// 1-based, 0 when no position applies.
class InstanceParseError : public std::runtime_error {
 public:
  InstanceParseError(const std::string& message, int line);
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedInstance {
  Instance instance;
  std::optional<ReductionMetadata> metadata;
};

// Line-oriented text format. Header `psi <nV> <nArcs> <nEdges> <nPairs>`,
// then `v <id> [<x> <y>] [<label>]` in id order, `a <tail> <head>`,
// `e <id> <u> <w>` in id order, `p <s> <t>`, with `#` starting a comment.
// When metadata is given, a sidecar follows: `m e <edge-id> <kind> <role>
// <element>`, `m p <index> <kind> <element>`, and `m v <var> top|bottom
// <edge-ids...>`, where an element is `x<var>`, `c<clause>`, or
// `x<var>c<clause>`. Coordinates round-trip exactly.
std::string serialize_instance(const Instance& instance,
                               const ReductionMetadata* metadata = nullptr);

// Inverse of serialize_instance; metadata is present iff the text has a
// sidecar, which must then be complete. Throws InstanceParseError.
ParsedInstance parse_instance(const std::string& text);

// Graphviz export: arcs as directed edges, undirected edges red and bold
// with no arrowhead, coordinates as pin hints, pair sources and targets
// shape-coded (diamond / box, hexagon when a vertex plays both roles).
std::string to_dot(const Instance& instance);

// `orientation <m>` header plus one line of F/R/U characters.
std::string serialize_orientation(const PartialOrientation& orientation);
PartialOrientation parse_orientation(const std::string& text);

}  // namespace psteiner
