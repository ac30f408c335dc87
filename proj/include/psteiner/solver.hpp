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
#include <vector>

#include "psteiner/mixed_graph.hpp"

namespace psteiner {

// Relaxed feasibility: treat every Unset edge as traversable in both
// directions and ask whether each pair still connects. A "no" is final --
// orienting an edge only removes traversals -- which is what makes this a
// sound pruning test. A "yes" promises nothing.
bool relaxed_feasible(const Instance& instance,
                      const PartialOrientation& partial);

struct PropagateResult {
  bool conflict = false;
  // State after propagation; on conflict, the state at the moment the
  // contradiction surfaced (forced assignments up to then are kept).
  PartialOrientation partial{0};
  // Edges whose orientation was forced, in the order they were fixed.
  std::vector<EdgeId> forced;
};

// Unit propagation to fixpoint: an unset edge whose one orientation would
// make some pair relaxed-infeasible is forced the other way; if both
// orientations are infeasible the state is contradictory.
PropagateResult propagate(const Instance& instance,
                          const PartialOrientation& partial);

enum class Status { Satisfiable, Unsatisfiable };

struct SolveStats {
  long long nodes = 0;         // search-tree nodes visited
  long long propagations = 0;  // edges fixed by propagation
  int peak_depth = 0;          // deepest branching level reached
  bool operator==(const SolveStats&) const = default;
};

struct SolveOptions {
  bool use_propagation = true;  // off: plain backtracking with pruning only
};

struct SolveResult {
  Status status = Status::Unsatisfiable;
  std::optional<PartialOrientation> witness;  // total, valid, iff Satisfiable
  SolveStats stats;
};

// Exact solver: depth-first branching on the lowest-id unset edge, Forward
// tried first, relaxed-feasibility pruning, and (by default) unit propagation
// at every node. Fully deterministic, stats included.
SolveResult solve(const Instance& instance, const SolveOptions& options = {});

// Hard limit on the exhaustive 2^m scan of enumerate_valid.
inline constexpr int kEnumerateEdgeLimit = 24;
// Default (effectively unlimited) solution-count cap for enumerate_valid.
inline constexpr long kNoCap = 1L << 62;

// Independent brute force: counts the total orientations (all 2^m) that
// satisfy every pair. Deliberately built on nothing but the plain
// reachability primitive so it can stand as an oracle against solve().
// Throws std::invalid_argument when the graph exceeds kEnumerateEdgeLimit
// edges and std::runtime_error when the count exceeds `cap`.
long enumerate_valid(const Instance& instance, long cap = kNoCap);

}  // namespace psteiner
