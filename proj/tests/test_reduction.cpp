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
//
// The formula -> instance reduction: frozen inventories for the fixture
// formulas, metadata completeness, decode round trips, the self-containment
// lemma checked by embedding, and formula/instance equivalence across the
// small-formula corpus.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "psteiner/formula.hpp"
#include "psteiner/gadgets.hpp"
#include "psteiner/layout.hpp"
#include "psteiner/planarity.hpp"
#include "psteiner/reachability.hpp"
#include "psteiner/reduction.hpp"
#include "psteiner/solver.hpp"
#include "subprocess.hpp"

using namespace psteiner;
using psteiner::testing::fixture_path;
using psteiner::testing::slurp;
using psteiner::testing::small_formula_corpus;

namespace {

// Clause indices (0-based) behind the chain edges of one variable, listed
// left to right. This is the observable form of the port assignment rule.
std::vector<int> chain_clauses(const CompileResult& c,
                               const std::vector<EdgeId>& chain) {
  std::vector<int> out;
  for (EdgeId e : chain) {
    const EdgeMeta& meta = c.metadata.edges[static_cast<std::size_t>(e)];
    REQUIRE(meta.role == "e");
    out.push_back(meta.element.clause);
  }
  return out;
}

// Connectivity verdict for `pairs` under every assignment of `edges`, all
// other edges held at `base`. Bit i of the table index is edge i, set means
// Forward.
std::vector<bool> pair_table(const MixedGraph& graph,
                             const std::vector<TerminalPair>& pairs,
                             const std::vector<EdgeId>& edges,
                             PartialOrientation base) {
  REQUIRE(edges.size() <= 8);
  std::vector<bool> table(1u << edges.size());
  for (unsigned bits = 0; bits < table.size(); ++bits) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      base.set(edges[i],
               (bits >> i) & 1u ? EdgeState::Forward : EdgeState::Reverse);
    }
    bool ok = true;
    for (const TerminalPair& p : pairs) {
      std::vector<VertexId> reach =
          reachable_set(graph, base, p.source, /*relaxed=*/false);
      if (!std::binary_search(reach.begin(), reach.end(), p.target)) {
        ok = false;
        break;
      }
    }
    table[bits] = ok;
  }
  return table;
}

std::vector<bool> standalone_table(const GadgetGraph& gadget) {
  std::vector<EdgeId> edges(static_cast<std::size_t>(gadget.graph.num_edges()));
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i] = static_cast<EdgeId>(i);
  return pair_table(gadget.graph, gadget.pairs, edges,
                    PartialOrientation(gadget.graph.num_edges()));
}

EdgeId standalone_port(const GadgetGraph& gadget, const char* name) {
  for (const Port& p : gadget.ports) {
    if (p.name == name) return p.edge;
  }
  FAIL("no port " << name);
  return -1;
}

// The instance pairs owned by one gadget, in insertion (= gadget) order.
std::vector<TerminalPair> pairs_of(const CompileResult& c, GadgetKind kind,
                                   FormulaElement element) {
  std::vector<TerminalPair> out;
  for (std::size_t i = 0; i < c.metadata.pairs.size(); ++i) {
    if (c.metadata.pairs[i].gadget == kind &&
        c.metadata.pairs[i].element == element) {
      out.push_back(c.instance.pairs()[i]);
    }
  }
  return out;
}

std::vector<EdgeId> edges_of_clause(const CompileResult& c, int clause) {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < c.metadata.edges.size(); ++e) {
    const EdgeMeta& m = c.metadata.edges[e];
    if (m.element.clause == clause && m.role != "e" && m.role != "middle") {
      out.push_back(static_cast<EdgeId>(e));
    }
  }
  std::sort(out.begin(), out.end());  // instance ids follow gadget-local ids
  return out;
}

EdgeId edge_with_role(const CompileResult& c, const std::string& role,
                      FormulaElement element) {
  for (std::size_t e = 0; e < c.metadata.edges.size(); ++e) {
    if (c.metadata.edges[e].role == role &&
        c.metadata.edges[e].element == element) {
      return static_cast<EdgeId>(e);
    }
  }
  FAIL("no edge with role " << role);
  return -1;
}

}  // namespace

TEST_CASE("appendix fixture: frozen inventory, leg order, solve and decode") {
  Formula f = parse_formula(slurp(fixture_path("appendix.formula")));
  Layout layout = validate_layout(f);
  CHECK(layout.depth == std::vector<int>{1, 2, 1, 1});

  CompileResult c = compile(f, layout);
  CHECK(c.instance.graph().num_vertices() == 262);
  CHECK(c.instance.graph().num_arcs() == 347);
  CHECK(c.instance.graph().num_edges() == 48);
  CHECK(c.instance.pairs().size() == 78);

  // Gadget census via metadata: 4 variables, 1 two-literal + 3 three-literal
  // clauses, 11 edge gadgets (one per occurrence).
  CHECK(c.metadata.variables.size() == 4);
  std::map<std::string, int> roles;
  for (const EdgeMeta& m : c.metadata.edges) ++roles[m.role];
  CHECK(roles == std::map<std::string, int>{{"e", 11},
                                            {"ebar", 11},
                                            {"etilde", 3},
                                            {"f", 4},
                                            {"g", 4},
                                            {"central", 4},
                                            {"middle", 11}});

  CHECK(check_planarity(c.instance.graph()));
  CHECK(check_source_sink_property(c.instance).empty());

  // Clause legs left to right at each variable: left-extending spans by
  // depth ascending, then a middle leg, then right-extending spans by depth
  // descending. Clause indices are 0-based.
  CHECK(chain_clauses(c, c.metadata.variables[0].top) == std::vector<int>{0});
  CHECK(chain_clauses(c, c.metadata.variables[0].bottom) ==
        std::vector<int>{1, 3});
  CHECK(chain_clauses(c, c.metadata.variables[1].top) ==
        std::vector<int>{0, 2});
  CHECK(chain_clauses(c, c.metadata.variables[1].bottom) ==
        std::vector<int>{3});
  CHECK(chain_clauses(c, c.metadata.variables[2].top) == std::vector<int>{2});
  CHECK(chain_clauses(c, c.metadata.variables[2].bottom) ==
        std::vector<int>{3, 1});
  CHECK(chain_clauses(c, c.metadata.variables[3].top) == std::vector<int>{2});
  CHECK(chain_clauses(c, c.metadata.variables[3].bottom) ==
        std::vector<int>{1});

  SolveResult r = solve(c.instance);
  REQUIRE(r.status == Status::Satisfiable);
  REQUIRE(r.witness.has_value());
  CHECK(verify_orientation(c.instance, *r.witness));
  // Pinned search trace; a change here means the solver explored differently.
  CHECK(r.stats.nodes == 7);
  CHECK(r.stats.propagations == 42);
  CHECK(r.stats.peak_depth == 6);

  std::vector<bool> assignment = decode(c.metadata, *r.witness);
  CHECK(assignment == std::vector<bool>{true, true, false, true});
  CHECK(evaluate(f, assignment));

  // compile is a pure function of (formula, layout).
  CompileResult again = compile(f, layout);
  CHECK(again.instance == c.instance);
  CHECK(again.metadata == c.metadata);

  CHECK_THROWS_AS(compile(f, Layout{{1, 1}}), std::invalid_argument);
}

TEST_CASE("minimal fixture: smallest legal formula end to end") {
  Formula f = parse_formula(slurp(fixture_path("minimal.formula")));
  CompileResult c = compile(f, validate_layout(f));
  CHECK(c.instance.graph().num_vertices() == 104);
  CHECK(c.instance.graph().num_arcs() == 136);
  CHECK(c.instance.graph().num_edges() == 18);
  CHECK(c.instance.pairs().size() == 30);
  CHECK(check_planarity(c.instance.graph()));
  CHECK(check_source_sink_property(c.instance).empty());

  SolveResult r = solve(c.instance);
  REQUIRE(r.status == Status::Satisfiable);
  CHECK(r.stats.nodes == 2);
  CHECK(r.stats.propagations == 17);
  CHECK(r.stats.peak_depth == 1);
  CHECK(decode(c.metadata, *r.witness) == std::vector<bool>{true, false});
}

TEST_CASE("unsat fixture: pigeonhole pairs compile to an unsolvable instance") {
  Formula f = parse_formula(slurp(fixture_path("unsat3.formula")));
  REQUIRE(!sat_oracle(f).has_value());
  CompileResult c = compile(f, validate_layout(f));
  CHECK(c.instance.graph().num_vertices() == 300);
  CHECK(c.instance.graph().num_arcs() == 396);
  CHECK(c.instance.graph().num_edges() == 54);
  CHECK(c.instance.pairs().size() == 84);

  SolveResult r = solve(c.instance);
  CHECK(r.status == Status::Unsatisfiable);
  CHECK(!r.witness.has_value());
  CHECK(r.stats.nodes == 3);
  CHECK(r.stats.propagations == 87);
  CHECK(r.stats.peak_depth == 1);
}

TEST_CASE("metadata covers every edge, pair and variable") {
  for (const char* name : {"appendix.formula", "minimal.formula"}) {
    CAPTURE(name);
    Formula f = parse_formula(slurp(fixture_path(name)));
    CompileResult c = compile(f, validate_layout(f));
    REQUIRE(static_cast<int>(c.metadata.edges.size()) ==
            c.instance.graph().num_edges());
    REQUIRE(c.metadata.pairs.size() == c.instance.pairs().size());
    REQUIRE(static_cast<int>(c.metadata.variables.size()) == f.num_vars);

    for (const EdgeMeta& m : c.metadata.edges) CHECK(!m.role.empty());

    // Chains: one edge per occurrence, tagged with the right variable, and
    // together they account for every "e" edge exactly once.
    std::vector<int> seen(c.metadata.edges.size(), 0);
    for (int x = 1; x <= f.num_vars; ++x) {
      const VariableChains& chains =
          c.metadata.variables[static_cast<std::size_t>(x - 1)];
      int pos = 0;
      int neg = 0;
      for (const Clause& cl : f.clauses) {
        if (std::find(cl.vars.begin(), cl.vars.end(), x) == cl.vars.end())
          continue;
        (cl.side == Side::Positive ? pos : neg) += 1;
      }
      CHECK(static_cast<int>(chains.top.size()) == pos);
      CHECK(static_cast<int>(chains.bottom.size()) == neg);
      for (const std::vector<EdgeId>* chain : {&chains.top, &chains.bottom}) {
        for (EdgeId e : *chain) {
          CHECK(c.metadata.edges[static_cast<std::size_t>(e)].element.variable ==
                x);
          ++seen[static_cast<std::size_t>(e)];
        }
      }
    }
    for (std::size_t e = 0; e < seen.size(); ++e) {
      CHECK(seen[e] == (c.metadata.edges[e].role == "e" ? 1 : 0));
    }
  }
}

TEST_CASE("decode rejects orientations that break the rotation pattern") {
  Formula f = parse_formula(slurp(fixture_path("minimal.formula")));
  CompileResult c = compile(f, validate_layout(f));
  SolveResult r = solve(c.instance);
  REQUIRE(r.witness.has_value());

  const VariableChains& chains = c.metadata.variables[0];
  REQUIRE(!chains.top.empty());
  REQUIRE(!chains.bottom.empty());

  PartialOrientation torn = *r.witness;
  torn.set(chains.top.front(), opposite(torn.state(chains.top.front())));
  CHECK_THROWS_AS(decode(c.metadata, torn), std::logic_error);

  PartialOrientation gap = *r.witness;
  gap.set(chains.bottom.front(), EdgeState::Unset);
  CHECK_THROWS_AS(decode(c.metadata, gap), std::logic_error);

  PartialOrientation parallel = *r.witness;
  for (EdgeId e : chains.top) parallel.set(e, EdgeState::Forward);
  for (EdgeId e : chains.bottom) parallel.set(e, EdgeState::Forward);
  CHECK_THROWS_AS(decode(c.metadata, parallel), std::logic_error);
}

TEST_CASE("gadgets stay self-contained inside a compiled instance") {
  // For every gadget in the compiled appendix instance: freeze all other
  // edges to a globally valid orientation and sweep the gadget's own edges.
  // Its own pairs must answer exactly as in the standalone gadget -- no help
  // and no interference from the rest of the instance.
  Formula f = parse_formula(slurp(fixture_path("appendix.formula")));
  CompileResult c = compile(f, validate_layout(f));
  SolveResult r = solve(c.instance);
  REQUIRE(r.witness.has_value());
  const MixedGraph& graph = c.instance.graph();

  for (int x = 1; x <= f.num_vars; ++x) {
    CAPTURE(x);
    const VariableChains& chains =
        c.metadata.variables[static_cast<std::size_t>(x - 1)];
    GadgetGraph standalone =
        build_variable(static_cast<int>(chains.top.size()),
                       static_cast<int>(chains.bottom.size()));
    std::vector<EdgeId> edges = chains.top;
    edges.insert(edges.end(), chains.bottom.begin(), chains.bottom.end());
    CHECK(pair_table(graph, pairs_of(c, GadgetKind::Variable, {x, -1}), edges,
                     *r.witness) == standalone_table(standalone));
  }

  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    CAPTURE(ci);
    const Clause& cl = f.clauses[ci];
    bool three = cl.vars.size() == 3;
    GadgetGraph standalone =
        three ? build_clause3(cl.side) : build_clause2(cl.side);
    GadgetKind kind = three ? GadgetKind::Clause3 : GadgetKind::Clause2;
    CHECK(pair_table(graph, pairs_of(c, kind, {0, static_cast<int>(ci)}),
                     edges_of_clause(c, static_cast<int>(ci)), *r.witness) ==
          standalone_table(standalone));
  }

  // The edge gadget's storage order is not [A, B, middle]; build both tables
  // over that logical order instead.
  GadgetGraph standalone_edge = build_edge_gadget();
  VertexId sml = standalone_edge.graph.vertex_by_label("ml");
  VertexId smr = standalone_edge.graph.vertex_by_label("mr");
  EdgeId standalone_middle = -1;
  for (EdgeId e = 0; e < standalone_edge.graph.num_edges(); ++e) {
    if (standalone_edge.graph.edge(e).u == sml &&
        standalone_edge.graph.edge(e).w == smr) {
      standalone_middle = e;
    }
  }
  REQUIRE(standalone_middle >= 0);
  std::vector<bool> edge_table = pair_table(
      standalone_edge.graph, standalone_edge.pairs,
      {standalone_port(standalone_edge, "A"),
       standalone_port(standalone_edge, "B"), standalone_middle},
      PartialOrientation(standalone_edge.graph.num_edges()));
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    for (int x : f.clauses[ci].vars) {
      CAPTURE(ci);
      CAPTURE(x);
      FormulaElement incidence{x, static_cast<int>(ci)};
      std::vector<EdgeId> edges = {
          edge_with_role(c, "e", incidence),
          edge_with_role(c, "ebar", incidence),
          edge_with_role(c, "middle", incidence),
      };
      CHECK(pair_table(graph, pairs_of(c, GadgetKind::Edge, incidence), edges,
                       *r.witness) == edge_table);
    }
  }
}

TEST_CASE("corpus: formula satisfiability carries over the reduction") {
  int sat = 0;
  int unsat = 0;
  for (const Formula& f : small_formula_corpus()) {
    CAPTURE(serialize_formula(f));
    EquivReport report = check_equivalence(f);
    CHECK(report.equivalent);
    CHECK(report.formula_satisfiable == report.instance_satisfiable);
    if (report.formula_satisfiable) {
      CHECK(report.decoded_ok);
      ++sat;
    } else {
      ++unsat;
    }
  }
  // A three-variable member is unsatisfiable exactly when neither side has a
  // variable common to all its clauses (no single true/false literal can
  // cover a side); 2 of the 12 covering clause sets per side are like that,
  // so the corpus contains 2 * 2 = 4 unsatisfiable members.
  CHECK(sat == 141);
  CHECK(unsat == 4);
}
