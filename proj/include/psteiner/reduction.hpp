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
#include "psteiner/gadgets.hpp"
#include "psteiner/layout.hpp"
#include "psteiner/mixed_graph.hpp"

namespace psteiner {

// What a compiled-instance element stands for: a variable (1-based position,
// 0 if none), a clause (0-based index, -1 if none), or an incidence (both).
struct FormulaElement {
  int variable = 0;
  int clause = -1;
  bool operator==(const FormulaElement&) const = default;
};

struct EdgeMeta {
  GadgetKind gadget = GadgetKind::Variable;
  // "e" (variable occurrence edge), "ebar" (clause literal edge), "etilde"
  // (clause synchronizing edge), "f", "g", "central", "middle".
  std::string role;
  FormulaElement element;
  bool operator==(const EdgeMeta&) const = default;
};

struct PairMeta {
  GadgetKind gadget = GadgetKind::Variable;
  FormulaElement element;
  bool operator==(const PairMeta&) const = default;
};

// The chain edges of one variable gadget, left to right; reading their
// common direction is how decode() recovers the assignment.
struct VariableChains {
  std::vector<EdgeId> top;
  std::vector<EdgeId> bottom;
  bool operator==(const VariableChains&) const = default;
};

// Provenance for every element of a compiled instance: edges and pairs are
// indexed by their instance ids, variables by position-1.
struct ReductionMetadata {
  std::vector<EdgeMeta> edges;
  std::vector<PairMeta> pairs;
  std::vector<VariableChains> variables;
  bool operator==(const ReductionMetadata&) const = default;
};

struct CompileResult {
  Instance instance;
  ReductionMetadata metadata;
};

// Builds the full reduction: one variable gadget per variable, one clause
// gadget per clause placed at its layout depth, one edge gadget per
// variable-clause incidence, stitched at shared port edges with left/right
// tags aligned so "rightward" means the same thing everywhere. Deterministic:
// ids are assigned variables first, then clauses, then edge gadgets, each in
// formula order.
CompileResult compile(const Formula& formula, const Layout& layout);

// Reads the assignment off a total orientation of a compiled instance:
// variable is TRUE iff its top chain runs rightward (clockwise). Throws
// std::logic_error if any chain deviates from the two rotational patterns,
// which a verified orientation never does.
std::vector<bool> decode(const ReductionMetadata& metadata,
                         const PartialOrientation& orientation);

struct EquivReport {
  bool formula_satisfiable = false;
  bool instance_satisfiable = false;
  // SAT case only: decode(witness) satisfies the formula.
  bool decoded_ok = false;
  bool equivalent = false;
};

// The whole pipeline on one formula: sat_oracle vs compile+solve (+decode).
EquivReport check_equivalence(const Formula& formula);

}  // namespace psteiner
