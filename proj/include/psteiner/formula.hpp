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
#include <vector>

namespace psteiner {

enum class Side { Positive, Negative };

// A monotone clause over variable positions (1-based, ascending).
struct Clause {
  Side side = Side::Positive;
  std::vector<int> vars;
  bool operator==(const Clause&) const = default;
};

// A monotone 3-SAT formula in the fixed left-to-right variable order that the
// rectilinear layout assumes. Invariants (enforced by parse_formula):
// clauses have 2 or 3 distinct variables; every variable occurs at least once
// on each side.
struct Formula {
  int num_vars = 0;
  std::vector<std::string> names;  // declaration order, size == num_vars
  std::vector<Clause> clauses;
  bool operator==(const Formula&) const = default;
};

// Parse/validation failure, with 1-based line and column when known (0 when
// the problem has no single position, e.g. a missing occurrence).
class FormulaError : public std::runtime_error {
 public:
  FormulaError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Text format: `vars: <name> ...` (one line, order fixes layout positions),
// then `pos: <name> ...` / `neg: <name> ...` clause lines; `#` to end of line
// is a comment. Throws FormulaError on any violation.
Formula parse_formula(const std::string& text);

// Bit-exact inverse of parse_formula for valid formulas: names in declaration
// order, clause variables in ascending position order.
std::string serialize_formula(const Formula& formula);

// True iff the assignment (indexed by position-1) satisfies every clause.
bool evaluate(const Formula& formula, const std::vector<bool>& assignment);

// Variable-count limit for the exhaustive oracle scan.
inline constexpr int kOracleVarLimit = 24;

// Brute-force satisfiability: scans all 2^n assignments in increasing order
// of the integer whose bit i-1 is variable i (so variable 1 flips fastest)
// and returns the first satisfying assignment, or nullopt if none exists.
// Throws std::invalid_argument above kOracleVarLimit variables.
std::optional<std::vector<bool>> sat_oracle(const Formula& formula);

}  // namespace psteiner
