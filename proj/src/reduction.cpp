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

#include "psteiner/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "psteiner/solver.hpp"

namespace psteiner {

namespace {

// A port edge that already exists in the output graph, with its left/right
// tags. Stitching a gadget onto it reuses the edge instead of copying it.
struct PortBinding {
  EdgeId edge = -1;
  VertexId left = -1;
  VertexId right = -1;
};

struct Instantiated {
  std::vector<VertexId> vertex_map;  // local vertex id -> instance id
  std::vector<EdgeId> edge_map;      // local edge id -> instance id
};

// Copies `gadget` into `graph`/`pairs`. Ports named in `bindings` are merged
// onto existing edges; everything else gets fresh ids, labels prefixed with
// `prefix`, and positions run through `place`. Port direction tags must
// agree: local left lands on bound left, right on right. Both gadget
// libraries store port edges left-to-right, so a mismatch here is a bug, not
// an input error.
Instantiated instantiate(MixedGraph& graph, std::vector<TerminalPair>& pairs,
                         const GadgetGraph& gadget,
                         const std::map<std::string, PortBinding>& bindings,
                         const std::string& prefix,
                         const std::function<Point(Point)>& place) {
  Instantiated out;
  out.vertex_map.assign(gadget.graph.num_vertices(), -1);
  out.edge_map.assign(gadget.graph.num_edges(), -1);

  for (const auto& [name, binding] : bindings) {
    const Port* port = nullptr;
    for (const Port& p : gadget.ports) {
      if (p.name == name) port = &p;
    }
    if (port == nullptr) {
      throw std::logic_error("no port named '" + name + "' to bind");
    }
    out.vertex_map[port->left] = binding.left;
    out.vertex_map[port->right] = binding.right;
    out.edge_map[port->edge] = binding.edge;
  }

  for (VertexId v = 0; v < gadget.graph.num_vertices(); ++v) {
    if (out.vertex_map[v] >= 0) continue;  // shared with a bound port
    const Vertex& lv = gadget.graph.vertex(v);
    std::optional<Point> pos;
    if (lv.pos) pos = place(*lv.pos);
    out.vertex_map[v] = graph.add_vertex(prefix + lv.label, pos);
  }

  for (const Arc& a : gadget.graph.arcs()) {
    graph.add_arc(out.vertex_map[a.tail], out.vertex_map[a.head]);
  }

  for (EdgeId e = 0; e < gadget.graph.num_edges(); ++e) {
    if (out.edge_map[e] >= 0) {
      // Bound edge: check the stitch keeps left-to-right storage aligned.
      const UndirectedEdge& local = gadget.graph.edge(e);
      const UndirectedEdge& global = graph.edge(out.edge_map[e]);
      if (out.vertex_map[local.u] != global.u ||
          out.vertex_map[local.w] != global.w) {
        throw std::logic_error("port stitch reverses edge orientation");
      }
      continue;
    }
    const UndirectedEdge& local = gadget.graph.edge(e);
    out.edge_map[e] =
        graph.add_edge(out.vertex_map[local.u], out.vertex_map[local.w]);
  }

  for (const TerminalPair& p : gadget.pairs) {
    pairs.push_back({out.vertex_map[p.source], out.vertex_map[p.target]});
  }
  return out;
}

PortBinding binding_for(const GadgetGraph& gadget, const Instantiated& inst,
                        const std::string& name) {
  for (const Port& p : gadget.ports) {
    if (p.name != name) continue;
    return {inst.edge_map[p.edge], inst.vertex_map[p.left],
            inst.vertex_map[p.right]};
  }
  throw std::logic_error("no port named '" + name + "'");
}

// Clause indices whose legs attach at variable `x` on `side`, left to right.
// A clause whose span ends at x comes in from the left, one whose span
// starts at x leaves to the right, and a middle leg drops straight down.
// Left arrivals sort by depth ascending (innermost track first), right
// departures by depth descending; a valid layout admits at most one middle
// leg per column and never ties the extender depths, since same-side spans
// sharing an endpoint must nest.
std::vector<int> legs_at(const Formula& formula, const Layout& layout, int x,
                         Side side) {
  std::vector<int> lefts, rights;
  int middle = -1;
  for (int c = 0; c < static_cast<int>(formula.clauses.size()); ++c) {
    const Clause& clause = formula.clauses[c];
    if (clause.side != side) continue;
    if (std::find(clause.vars.begin(), clause.vars.end(), x) ==
        clause.vars.end()) {
      continue;
    }
    if (clause.vars.back() == x) {
      lefts.push_back(c);
    } else if (clause.vars.front() == x) {
      rights.push_back(c);
    } else {
      if (middle >= 0) {
        throw std::logic_error("two middle legs in one column");
      }
      middle = c;
    }
  }
  auto by_depth = [&](int a, int b) {
    if (layout.depth[a] != layout.depth[b]) {
      return layout.depth[a] < layout.depth[b];
    }
    return a < b;
  };
  std::sort(lefts.begin(), lefts.end(), by_depth);
  std::sort(rights.begin(), rights.end(), by_depth);
  std::reverse(rights.begin(), rights.end());

  std::vector<int> order = std::move(lefts);
  if (middle >= 0) order.push_back(middle);
  order.insert(order.end(), rights.begin(), rights.end());
  return order;
}

std::function<Point(Point)> translate(double dx, double dy) {
  return [dx, dy](Point p) { return Point{p.x + dx, p.y + dy}; };
}

}  // namespace

CompileResult compile(const Formula& formula, const Layout& layout) {
  const int num_vars = formula.num_vars;
  const int num_clauses = static_cast<int>(formula.clauses.size());
  if (static_cast<int>(layout.depth.size()) != num_clauses) {
    throw std::invalid_argument("layout does not match formula");
  }

  MixedGraph graph;
  std::vector<TerminalPair> pairs;
  ReductionMetadata meta;

  // Port of each (variable, clause, side) incidence on the variable row and
  // on the clause, filled in as the gadgets are laid down.
  std::map<std::pair<int, int>, PortBinding> var_port;
  std::map<std::pair<int, int>, PortBinding> clause_port;

  auto record_pairs = [&](GadgetKind kind, FormulaElement element,
                          std::size_t first) {
    for (std::size_t i = first; i < pairs.size(); ++i) {
      meta.pairs.push_back({kind, element});
    }
  };

  // Variable gadgets, left to right. Chain x positions advance with the
  // wider of the two occurrence counts plus a fixed gap.
  std::vector<std::vector<int>> pos_legs(num_vars), neg_legs(num_vars);
  double cursor = 0;
  for (int x = 1; x <= num_vars; ++x) {
    pos_legs[x - 1] = legs_at(formula, layout, x, Side::Positive);
    neg_legs[x - 1] = legs_at(formula, layout, x, Side::Negative);
    const int p = static_cast<int>(pos_legs[x - 1].size());
    const int n = static_cast<int>(neg_legs[x - 1].size());

    GadgetGraph gadget = build_variable(p, n);
    std::size_t first_pair = pairs.size();
    const EdgeId first_edge = graph.num_edges();
    Instantiated inst =
        instantiate(graph, pairs, gadget, {},
                    formula.names[x - 1] + ".", translate(cursor, 0));
    cursor += 3.0 * std::max(p, n) + 6;

    VariableChains chains;
    for (int k = 0; k < p; ++k) {
      PortBinding b = binding_for(gadget, inst, "pos" + std::to_string(k + 1));
      var_port[{x, pos_legs[x - 1][k]}] = b;
      chains.top.push_back(b.edge);
    }
    for (int k = 0; k < n; ++k) {
      PortBinding b = binding_for(gadget, inst, "neg" + std::to_string(k + 1));
      var_port[{x, neg_legs[x - 1][k]}] = b;
      chains.bottom.push_back(b.edge);
    }
    meta.variables.push_back(std::move(chains));

    for (EdgeId e = first_edge; e < graph.num_edges(); ++e) {
      // Filled per port below; placeholder keeps ids aligned.
      meta.edges.push_back({GadgetKind::Variable, "e", {x, -1}});
    }
    for (int k = 0; k < p; ++k) {
      meta.edges[var_port[{x, pos_legs[x - 1][k]}].edge].element.clause =
          pos_legs[x - 1][k];
    }
    for (int k = 0; k < n; ++k) {
      meta.edges[var_port[{x, neg_legs[x - 1][k]}].edge].element.clause =
          neg_legs[x - 1][k];
    }
    record_pairs(GadgetKind::Variable, {x, -1}, first_pair);
  }

  // Clause gadgets, in formula order. A clause sits on the track for its
  // depth, centered over its span; negative clauses hang mirrored below.
  for (int c = 0; c < num_clauses; ++c) {
    const Clause& clause = formula.clauses[c];
    const bool two = clause.vars.size() == 2;
    const GadgetKind kind = two ? GadgetKind::Clause2 : GadgetKind::Clause3;
    GadgetGraph gadget =
        two ? build_clause2(clause.side) : build_clause3(clause.side);

    double span_lo = 1e18, span_hi = -1e18;
    for (int x : clause.vars) {
      const PortBinding& b = var_port.at({x, c});
      span_lo = std::min(span_lo, graph.vertex(b.left).pos->x);
      span_hi = std::max(span_hi, graph.vertex(b.right).pos->x);
    }
    const double dx = (span_lo + span_hi) / 2 - 6.5;
    const double track = 4.0 + 9.0 * (layout.depth[c] - 1);
    const double dy = clause.side == Side::Positive ? track : -track;

    std::size_t first_pair = pairs.size();
    const EdgeId first_edge = graph.num_edges();
    Instantiated inst =
        instantiate(graph, pairs, gadget, {},
                    "c" + std::to_string(c) + ".", translate(dx, dy));

    const char* port_names[3] = {"ex", "ey", "ez"};
    for (std::size_t i = 0; i < clause.vars.size(); ++i) {
      const char* name = two && i == 1 ? "ez" : port_names[i];
      clause_port[{c, clause.vars[i]}] = binding_for(gadget, inst, name);
    }

    for (EdgeId e = first_edge; e < graph.num_edges(); ++e) {
      meta.edges.push_back({kind, "", {0, c}});
    }
    for (std::size_t i = 0; i < clause.vars.size(); ++i) {
      EdgeMeta& m = meta.edges[clause_port[{c, clause.vars[i]}].edge];
      m.role = "ebar";
      m.element.variable = clause.vars[i];
    }
    // The clause's own edges carry no ports; find them by endpoints.
    auto name_role = [&](const char* lu, const char* lw, const char* role,
                         int variable) {
      const VertexId u = gadget.graph.vertex_by_label(lu);
      const VertexId w = gadget.graph.vertex_by_label(lw);
      for (EdgeId e = 0; e < gadget.graph.num_edges(); ++e) {
        if (gadget.graph.edge(e).u != u || gadget.graph.edge(e).w != w) {
          continue;
        }
        EdgeMeta& m = meta.edges[inst.edge_map[e]];
        m.role = role;
        m.element.variable = variable;
        return;
      }
      throw std::logic_error(std::string("clause gadget lost its ") + role +
                             " edge");
    };
    if (!two) name_role("ul", "ur", "etilde", clause.vars[1]);
    name_role("s2", "s1", "f", 0);
    name_role("t2", "t1", "g", 0);
    name_role("c1", "c2", "central", 0);
    record_pairs(kind, {0, c}, first_pair);
  }

  // Edge gadgets, clause-major. Port A merges with the variable-row edge,
  // port B with the clause edge; left tags meet left tags, so a rightward
  // chain edge and a rightward clause edge stay synchronized. New vertices
  // are sheared into the band between the two ports.
  for (int c = 0; c < num_clauses; ++c) {
    for (int x : formula.clauses[c].vars) {
      GadgetGraph gadget = build_edge_gadget();
      const PortBinding& a = var_port.at({x, c});
      const PortBinding& b = clause_port.at({c, x});
      const Point pa = *graph.vertex(a.left).pos;
      const Point pb = *graph.vertex(b.left).pos;
      auto shear = [pa, pb](Point p) {
        const double t = (4.0 - p.y) / 4.0;  // 0 at port A, 1 at port B
        return Point{p.x + pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)};
      };
      std::size_t first_pair = pairs.size();
      const EdgeId first_edge = graph.num_edges();
      instantiate(graph, pairs, gadget, {{"A", a}, {"B", b}},
                  "c" + std::to_string(c) + "." + formula.names[x - 1] + ".",
                  shear);
      for (EdgeId e = first_edge; e < graph.num_edges(); ++e) {
        meta.edges.push_back({GadgetKind::Edge, "middle", {x, c}});
      }
      record_pairs(GadgetKind::Edge, {x, c}, first_pair);
    }
  }

  return {Instance(std::move(graph), std::move(pairs)), std::move(meta)};
}

std::vector<bool> decode(const ReductionMetadata& metadata,
                         const PartialOrientation& orientation) {
  std::vector<bool> assignment;
  assignment.reserve(metadata.variables.size());
  for (std::size_t i = 0; i < metadata.variables.size(); ++i) {
    const VariableChains& chains = metadata.variables[i];
    if (chains.top.empty() || chains.bottom.empty()) {
      throw std::logic_error("variable " + std::to_string(i + 1) +
                             " has an empty chain");
    }
    const EdgeState top = orientation.state(chains.top.front());
    const EdgeState bottom = orientation.state(chains.bottom.front());
    bool ok = top != EdgeState::Unset && bottom == opposite(top);
    for (EdgeId e : chains.top) ok = ok && orientation.state(e) == top;
    for (EdgeId e : chains.bottom) ok = ok && orientation.state(e) == bottom;
    if (!ok) {
      throw std::logic_error("variable " + std::to_string(i + 1) +
                             " is not in a rotational state");
    }
    assignment.push_back(top == EdgeState::Forward);
  }
  return assignment;
}

EquivReport check_equivalence(const Formula& formula) {
  EquivReport report;
  report.formula_satisfiable = sat_oracle(formula).has_value();

  Layout layout = validate_layout(formula);
  CompileResult compiled = compile(formula, layout);
  SolveResult solved = solve(compiled.instance);
  report.instance_satisfiable = solved.status == Status::Satisfiable;

  if (report.instance_satisfiable) {
    std::vector<bool> assignment = decode(compiled.metadata, *solved.witness);
    report.decoded_ok = evaluate(formula, assignment);
  }
  report.equivalent =
      report.formula_satisfiable == report.instance_satisfiable &&
      (!report.instance_satisfiable || report.decoded_ok);
  return report;
}

}  // namespace psteiner
