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

#include <stdexcept>
#include <string>
#include <vector>

#include "psteiner/formula.hpp"

namespace psteiner {

// Rectilinear nesting depths, one per clause (indexed like
// Formula::clauses). Depth 1 = the clause's horizontal segment sits adjacent
// to the variable row; a clause nested inside another sits closer to the row,
// so an inner clause always has a smaller depth than the clause around it.
// Depths are computed independently for the positive (above the row) and
// negative (below) sides.
struct Layout {
  std::vector<int> depth;
  bool operator==(const Layout&) const = default;
};

// A same-side clause pair whose legs cannot be drawn without crossing.
class LayoutError : public std::runtime_error {
 public:
  LayoutError(const std::string& message, int clause_a, int clause_b,
              int variable);
  int clause_a() const { return clause_a_; }
  int clause_b() const { return clause_b_; }
  int variable() const { return variable_; }  // 1-based position

 private:
  int clause_a_;
  int clause_b_;
  int variable_;
};

// Accepts the formula as a planar rectilinear instance or throws LayoutError.
// Two same-side clauses are compatible iff their spans [min var, max var]
// have disjoint interiors, or one nests inside the other with the outer
// clause attaching no leg strictly between the inner clause's leftmost and
// rightmost legs. Order-insensitive: permuting the clause list changes
// neither the verdict nor the per-side depth multiset.
Layout validate_layout(const Formula& formula);

}  // namespace psteiner
