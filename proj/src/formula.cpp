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

#include "psteiner/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace psteiner {

FormulaError::FormulaError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                        (column > 0 ? ", column " +
                                                          std::to_string(column)
                                                    : "") +
                                        ": " + message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based start position in the line
};

// Whitespace-split with column positions; everything from '#' on is comment.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Formula formula;
  std::map<std::string, int> position;  // name -> 1-based position
  bool saw_vars = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    const Token& head = tokens.front();
    if (!saw_vars) {
      if (head.text != "vars:") {
        throw FormulaError("expected 'vars:' before any clause, got '" +
                               head.text + "'",
                           line_no, head.column);
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Token& tok = tokens[i];
        if (tok.text.find('~') != std::string::npos) {
          throw FormulaError("variable name '" + tok.text +
                                 "' may not contain '~'",
                             line_no, tok.column);
        }
        if (position.count(tok.text) != 0) {
          throw FormulaError("duplicate variable name '" + tok.text + "'",
                             line_no, tok.column);
        }
        formula.names.push_back(tok.text);
        position[tok.text] = static_cast<int>(formula.names.size());
      }
      formula.num_vars = static_cast<int>(formula.names.size());
      saw_vars = true;
      continue;
    }

    Clause clause;
    if (head.text == "pos:") {
      clause.side = Side::Positive;
    } else if (head.text == "neg:") {
      clause.side = Side::Negative;
    } else {
      throw FormulaError("expected 'pos:' or 'neg:', got '" + head.text + "'",
                         line_no, head.column);
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const Token& tok = tokens[i];
      if (!tok.text.empty() && tok.text.front() == '~') {
        throw FormulaError(
            "non-monotone clause: literal '" + tok.text +
                "' is negated inside a clause whose sign is fixed by its "
                "'pos:'/'neg:' keyword",
            line_no, tok.column);
      }
      auto it = position.find(tok.text);
      if (it == position.end()) {
        throw FormulaError("unknown variable '" + tok.text + "'", line_no,
                           tok.column);
      }
      if (std::find(clause.vars.begin(), clause.vars.end(), it->second) !=
          clause.vars.end()) {
        throw FormulaError("duplicate variable '" + tok.text + "' in clause",
                           line_no, tok.column);
      }
      clause.vars.push_back(it->second);
    }
    if (clause.vars.size() < 2 || clause.vars.size() > 3) {
      throw FormulaError("clause has " + std::to_string(clause.vars.size()) +
                             " variables, want 2 or 3",
                         line_no, head.column);
    }
    std::sort(clause.vars.begin(), clause.vars.end());
    formula.clauses.push_back(std::move(clause));
  }

  if (!saw_vars) {
    throw FormulaError("missing 'vars:' line", 0, 0);
  }

  // WLOG condition: each variable occurs on both sides. Validated, never
  // auto-repaired -- padding clauses in would change the instance.
  std::vector<bool> pos_seen(static_cast<std::size_t>(formula.num_vars), false);
  std::vector<bool> neg_seen(static_cast<std::size_t>(formula.num_vars), false);
  for (const Clause& c : formula.clauses) {
    auto& seen = c.side == Side::Positive ? pos_seen : neg_seen;
    for (int v : c.vars) seen[static_cast<std::size_t>(v - 1)] = true;
  }
  for (int v = 1; v <= formula.num_vars; ++v) {
    if (!pos_seen[static_cast<std::size_t>(v - 1)]) {
      throw FormulaError("variable '" +
                             formula.names[static_cast<std::size_t>(v - 1)] +
                             "' never occurs in a positive clause",
                         0, 0);
    }
    if (!neg_seen[static_cast<std::size_t>(v - 1)]) {
      throw FormulaError("variable '" +
                             formula.names[static_cast<std::size_t>(v - 1)] +
                             "' never occurs in a negative clause",
                         0, 0);
    }
  }
  return formula;
}

std::string serialize_formula(const Formula& formula) {
  std::ostringstream out;
  out << "vars:";
  for (const std::string& name : formula.names) out << ' ' << name;
  out << '\n';
  for (const Clause& c : formula.clauses) {
    out << (c.side == Side::Positive ? "pos:" : "neg:");
    for (int v : c.vars) {
      out << ' ' << formula.names[static_cast<std::size_t>(v - 1)];
    }
    out << '\n';
  }
  return out.str();
}

bool evaluate(const Formula& formula, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(formula.num_vars)) {
    throw std::invalid_argument("assignment size " +
                                std::to_string(assignment.size()) +
                                " does not match " +
                                std::to_string(formula.num_vars) +
                                " variables");
  }
  for (const Clause& c : formula.clauses) {
    bool satisfied = false;
    for (int v : c.vars) {
      bool value = assignment[static_cast<std::size_t>(v - 1)];
      if (c.side == Side::Positive ? value : !value) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

std::optional<std::vector<bool>> sat_oracle(const Formula& formula) {
  if (formula.num_vars > kOracleVarLimit) {
    throw std::invalid_argument("sat_oracle: " +
                                std::to_string(formula.num_vars) +
                                " variables exceeds the limit of " +
                                std::to_string(kOracleVarLimit));
  }
  int n = formula.num_vars;
  std::vector<bool> assignment(static_cast<std::size_t>(n), false);
  for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
    for (int v = 0; v < n; ++v) {
      assignment[static_cast<std::size_t>(v)] = (bits >> v & 1UL) != 0;
    }
    if (evaluate(formula, assignment)) return assignment;
  }
  return std::nullopt;
}

}  // namespace psteiner
