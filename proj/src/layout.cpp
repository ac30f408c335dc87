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

#include "psteiner/layout.hpp"

#include <algorithm>
#include <limits>

namespace psteiner {

LayoutError::LayoutError(const std::string& message, int clause_a,
                         int clause_b, int variable)
    : std::runtime_error(message),
      clause_a_(clause_a),
      clause_b_(clause_b),
      variable_(variable) {}

namespace {

int span_lo(const Clause& c) { return c.vars.front(); }  // vars sorted
int span_hi(const Clause& c) { return c.vars.back(); }

// Smallest leg of c strictly inside the open interval (lo, hi), or 0.
int leg_strictly_inside(const Clause& c, int lo, int hi) {
  for (int v : c.vars) {
    if (v > lo && v < hi) return v;
  }
  return 0;
}

[[noreturn]] void fail(const Formula& formula, Side side, int a, int b) {
  const Clause& ca = formula.clauses[static_cast<std::size_t>(a)];
  const Clause& cb = formula.clauses[static_cast<std::size_t>(b)];
  // Witness: the smallest variable that is a leg of one clause and strictly
  // interior to the other's span. Every rejected pair has one.
  int witness = std::numeric_limits<int>::max();
  int w1 = leg_strictly_inside(ca, span_lo(cb), span_hi(cb));
  int w2 = leg_strictly_inside(cb, span_lo(ca), span_hi(ca));
  if (w1 != 0) witness = std::min(witness, w1);
  if (w2 != 0) witness = std::min(witness, w2);
  throw LayoutError(
      std::string(side == Side::Positive ? "positive" : "negative") +
          " clauses " + std::to_string(a) + " and " + std::to_string(b) +
          " cross at variable '" +
          formula.names[static_cast<std::size_t>(witness - 1)] + "'",
      a, b, witness);
}

}  // namespace

Layout validate_layout(const Formula& formula) {
  int nc = static_cast<int>(formula.clauses.size());
  // nested_inside[outer] lists every same-side clause nested within it (the
  // full relation, not just direct children -- fine for longest-chain depth).
  std::vector<std::vector<int>> nested_inside(static_cast<std::size_t>(nc));

  for (int i = 0; i < nc; ++i) {
    const Clause& ci = formula.clauses[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < nc; ++j) {
      const Clause& cj = formula.clauses[static_cast<std::size_t>(j)];
      if (ci.side != cj.side) continue;
      int lo_i = span_lo(ci), hi_i = span_hi(ci);
      int lo_j = span_lo(cj), hi_j = span_hi(cj);
      if (std::min(hi_i, hi_j) <= std::max(lo_i, lo_j)) {
        continue;  // interiors disjoint: side by side, shared endpoint legal
      }
      bool i_in_j = lo_j <= lo_i && hi_i <= hi_j;
      bool j_in_i = lo_i <= lo_j && hi_j <= hi_i;
      if (i_in_j && j_in_i) {
        // Equal spans: stack them. The outer one may not have legs strictly
        // inside the shared span, so a clause with interior legs must be the
        // inner one -- two such clauses cannot coexist.
        bool int_i = leg_strictly_inside(ci, lo_i, hi_i) != 0;
        bool int_j = leg_strictly_inside(cj, lo_j, hi_j) != 0;
        if (int_i && int_j) fail(formula, ci.side, i, j);
        int inner = int_i ? i : (int_j ? j : i);  // index breaks the tie
        int outer = inner == i ? j : i;
        nested_inside[static_cast<std::size_t>(outer)].push_back(inner);
      } else if (j_in_i) {
        if (leg_strictly_inside(ci, lo_j, hi_j) != 0) {
          fail(formula, ci.side, i, j);  // outer leg stabs the inner span
        }
        nested_inside[static_cast<std::size_t>(i)].push_back(j);
      } else if (i_in_j) {
        if (leg_strictly_inside(cj, lo_i, hi_i) != 0) {
          fail(formula, ci.side, i, j);
        }
        nested_inside[static_cast<std::size_t>(j)].push_back(i);
      } else {
        fail(formula, ci.side, i, j);  // properly overlapping spans
      }
    }
  }

  // Depth = longest nesting chain underneath + 1. The relation is a strict
  // partial order, so plain memoized recursion terminates.
  Layout layout;
  layout.depth.assign(static_cast<std::size_t>(nc), 0);
  // Iterative fixpoint avoids recursion entirely: with the full (transitive)
  // relation recorded, nc passes suffice.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < nc; ++c) {
      int want = 1;
      for (int inner : nested_inside[static_cast<std::size_t>(c)]) {
        want = std::max(want,
                        layout.depth[static_cast<std::size_t>(inner)] + 1);
      }
      if (layout.depth[static_cast<std::size_t>(c)] != want) {
        layout.depth[static_cast<std::size_t>(c)] = want;
        changed = true;
      }
    }
  }
  return layout;
}

}  // namespace psteiner
