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

#include "psteiner/gadgets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace psteiner {

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::Flip: return "flip";
    case GadgetKind::Variable: return "variable";
    case GadgetKind::Clause3: return "clause3";
    case GadgetKind::Clause2: return "clause2";
    case GadgetKind::Edge: return "edge";
  }
  return "?";
}

Instance to_instance(const GadgetGraph& gadget) {
  return Instance(gadget.graph, gadget.pairs);
}

namespace {

// Small helper so the builders can talk in vertex names.
class NamedBuilder {
 public:
  explicit NamedBuilder(GadgetGraph* out) : out_(out) {}

  VertexId vertex(const std::string& name, double x, double y) {
    VertexId id = out_->graph.add_vertex(name, Point{x, y});
    ids_[name] = id;
    return id;
  }

  VertexId id(const std::string& name) const { return ids_.at(name); }

  void arc(const std::string& tail, const std::string& head) {
    out_->graph.add_arc(id(tail), id(head));
  }

  // Edge stored left-to-right so Forward == rightward.
  EdgeId edge(const std::string& left, const std::string& right) {
    return out_->graph.add_edge(id(left), id(right));
  }

  EdgeId port(const std::string& port_name, const std::string& left,
              const std::string& right) {
    EdgeId e = edge(left, right);
    out_->ports.push_back({port_name, e, id(left), id(right)});
    return e;
  }

  void pair(const std::string& source, const std::string& target) {
    out_->pairs.push_back({id(source), id(target)});
  }

 private:
  GadgetGraph* out_;
  std::map<std::string, VertexId> ids_;
};

}  // namespace

GadgetGraph build_flip() {
  GadgetGraph g;
  NamedBuilder b(&g);
  b.vertex("s1", 0, 1);
  b.vertex("t1", 4, 1);
  b.vertex("s2", 4, 0);
  b.vertex("t2", 0, 0);
  b.vertex("ul", 1, 1);
  b.vertex("ur", 3, 1);
  b.vertex("ll", 1, 0);
  b.vertex("lr", 3, 0);
  b.arc("s1", "ul");
  b.arc("s1", "ll");
  b.arc("s2", "ur");
  b.arc("s2", "lr");
  b.arc("ul", "t2");
  b.arc("ll", "t2");
  b.arc("ur", "t1");
  b.arc("lr", "t1");
  b.port("top", "ul", "ur");
  b.port("bottom", "ll", "lr");
  b.pair("s1", "t1");
  b.pair("s2", "t2");
  return g;
}

GadgetGraph build_variable(int positive_occurrences,
                           int negative_occurrences) {
  int p = positive_occurrences;
  int n = negative_occurrences;
  if (p < 1 || n < 1) {
    throw std::invalid_argument(
        "variable gadget needs at least one occurrence per side (got p=" +
        std::to_string(p) + ", n=" + std::to_string(n) + ")");
  }
  GadgetGraph g;
  NamedBuilder b(&g);
  // Width leaves room for the longer chain; terminals flank the chains on
  // the variable row (y = 0), chains run above/below it.
  double width = 3.0 * std::max(p, n) + 2.0;
  b.vertex("t2", 0, 0);
  b.vertex("s1", 1, 0);
  b.vertex("s2", width - 1, 0);
  b.vertex("t1", width, 0);
  auto chain = [&b](const std::string& stem, int count, double y) {
    for (int i = 0; i < count; ++i) {
      b.vertex(stem + std::to_string(2 * i), 2 + 3.0 * i, y);
      b.vertex(stem + std::to_string(2 * i + 1), 4 + 3.0 * i, y);
    }
  };
  chain("u", p, 1.5);
  chain("l", n, -1.5);

  std::string u_last = "u" + std::to_string(2 * p - 1);
  std::string l_last = "l" + std::to_string(2 * n - 1);
  b.arc("s1", "u0");
  b.arc("s1", "l0");
  b.arc("s2", u_last);
  b.arc("s2", l_last);
  b.arc("u0", "t2");
  b.arc("l0", "t2");
  b.arc(u_last, "t1");
  b.arc(l_last, "t1");
  // Antiparallel arc pairs splice consecutive occurrence edges together.
  auto splice = [&b](const std::string& stem, int count) {
    for (int i = 1; i < count; ++i) {
      std::string a = stem + std::to_string(2 * i - 1);
      std::string c = stem + std::to_string(2 * i);
      b.arc(a, c);
      b.arc(c, a);
    }
  };
  splice("u", p);
  splice("l", n);

  for (int i = 0; i < p; ++i) {
    b.port("pos" + std::to_string(i + 1), "u" + std::to_string(2 * i),
           "u" + std::to_string(2 * i + 1));
  }
  for (int i = 0; i < n; ++i) {
    b.port("neg" + std::to_string(i + 1), "l" + std::to_string(2 * i),
           "l" + std::to_string(2 * i + 1));
  }
  b.pair("s1", "t1");
  b.pair("s2", "t2");
  return g;
}

namespace {

struct VertexSpec {
  const char* name;
  double x, y;
};

struct ArcSpec {
  const char* tail, *head;
};

// The three-literal clause gadget, drawn positive-side-up. The three literal
// edges sit on the row at the bottom; the two flips (f/g synchronized through
// the central edge) occupy the upper half and gate the long s-t detours.
constexpr VertexSpec kClauseVertices[] = {
    {"t", 3, 2},      {"s", 10, 2},     {"lx", 0, 0},     {"rx", 2, 0},
    {"tt2", 4, 1},    {"ss1", 5, 1},    {"ss2", 8, 1},    {"tt1", 9, 1},
    {"ll", 5.5, 0},   {"lr", 7.5, 0},   {"ul", 5.5, 2},   {"ur", 7.5, 2},
    {"lz", 11, 0},    {"rz", 13, 0},    {"t1", 3, 3.5},   {"s1", 10, 3.5},
    {"t2", 3, 5.5},   {"s2", 10, 5.5},  {"t3", 2, 6.5},   {"s3", 11, 6.5},
    {"c1", 6.5, 4},   {"c2", 6.5, 6},   {"l3", 4.75, 3.5}, {"ll4", 4.75, 4.5},
    {"l4", 4.75, 5.3}, {"ll3", 4.75, 6}, {"r3", 8.25, 3.5}, {"rr4", 8.25, 4.5},
    {"r4", 8.25, 5.3}, {"rr3", 8.25, 6},
};

constexpr ArcSpec kClauseArcs[] = {
    {"t1", "t"},   {"t3", "t2"},  {"s", "s1"},   {"s2", "s3"},
    {"rz", "s3"},  {"s3", "t3"},  {"t3", "lx"},  {"ll4", "t1"},
    {"ll4", "c1"}, {"ll3", "t2"}, {"ll3", "c2"}, {"t1", "l3"},
    {"c1", "l3"},  {"t2", "l4"},  {"c2", "l4"},  {"rr4", "s1"},
    {"rr4", "c1"}, {"rr3", "s2"}, {"rr3", "c2"}, {"s1", "r3"},
    {"c1", "r3"},  {"s2", "r4"},  {"c2", "r4"},  {"ss1", "ul"},
    {"ss1", "ll"}, {"ss2", "ur"}, {"ss2", "lr"}, {"ul", "tt2"},
    {"ll", "tt2"}, {"ur", "tt1"}, {"lr", "tt1"}, {"rx", "t"},
    {"ul", "t"},   {"s", "ur"},   {"s", "lz"},
};

// Vertices and arcs that exist only in the three-literal variant (the middle
// flip). Dropping them and bridging ul->ur yields the two-literal gadget.
constexpr const char* kMiddleFlipVertices[] = {"tt2", "ss1", "ss2",
                                               "tt1", "ll",  "lr"};

bool in_middle_flip(const std::string& name) {
  for (const char* v : kMiddleFlipVertices) {
    if (name == v) return true;
  }
  return false;
}

GadgetGraph build_clause(Side side, bool two_literal) {
  GadgetGraph g;
  NamedBuilder b(&g);
  double flip_y = side == Side::Positive ? 1.0 : -1.0;
  for (const VertexSpec& v : kClauseVertices) {
    if (two_literal && in_middle_flip(v.name)) continue;
    b.vertex(v.name, v.x, v.y * flip_y);
  }
  for (const ArcSpec& a : kClauseArcs) {
    if (two_literal && (in_middle_flip(a.tail) || in_middle_flip(a.head))) {
      continue;
    }
    b.arc(a.tail, a.head);
  }
  if (two_literal) {
    b.arc("ul", "ur");  // planarity filler; ur becomes a dead end
  }

  b.port("ex", "lx", "rx");
  if (!two_literal) b.port("ey", "ll", "lr");
  b.port("ez", "lz", "rz");
  if (!two_literal) b.edge("ul", "ur");  // the synchronizing edge
  b.edge("s2", "s1");                    // f, stored top-down
  b.edge("t2", "t1");                    // g, stored top-down
  b.edge("c1", "c2");                    // central, stored bottom-up

  b.pair("s", "t");
  if (!two_literal) {
    b.pair("ss1", "tt1");
    b.pair("ss2", "tt2");
  }
  b.pair("ll4", "l4");
  b.pair("ll3", "l3");
  b.pair("rr4", "r4");
  b.pair("rr3", "r3");
  return g;
}

}  // namespace

GadgetGraph build_clause3(Side side) { return build_clause(side, false); }

GadgetGraph build_clause2(Side side) { return build_clause(side, true); }

GadgetGraph build_edge_gadget() {
  GadgetGraph g;
  NamedBuilder b(&g);
  // A vertical column: port A on top, middle edge m, port B at the bottom,
  // with one flip spanning each adjacent pair of edges.
  b.vertex("al", 0, 4);
  b.vertex("ar", 2, 4);
  b.vertex("f1.t2", -1, 2.5);
  b.vertex("f1.s1", -1, 3.5);
  b.vertex("f1.s2", 3, 2.5);
  b.vertex("f1.t1", 3, 3.5);
  b.vertex("ml", 0, 2);
  b.vertex("mr", 2, 2);
  b.vertex("f2.t2", -1, 0.5);
  b.vertex("f2.s1", -1, 1.5);
  b.vertex("f2.s2", 3, 0.5);
  b.vertex("f2.t1", 3, 1.5);
  b.vertex("bl", 0, 0);
  b.vertex("br", 2, 0);

  b.arc("f1.s1", "al");
  b.arc("f1.s1", "ml");
  b.arc("f1.s2", "ar");
  b.arc("f1.s2", "mr");
  b.arc("al", "f1.t2");
  b.arc("ml", "f1.t2");
  b.arc("ar", "f1.t1");
  b.arc("mr", "f1.t1");

  b.arc("f2.s1", "ml");
  b.arc("f2.s1", "bl");
  b.arc("f2.s2", "mr");
  b.arc("f2.s2", "br");
  b.arc("ml", "f2.t2");
  b.arc("bl", "f2.t2");
  b.arc("mr", "f2.t1");
  b.arc("br", "f2.t1");

  b.port("A", "al", "ar");
  b.edge("ml", "mr");  // the middle edge, antiparallel to both ports
  b.port("B", "bl", "br");

  b.pair("f1.s1", "f1.t1");
  b.pair("f1.s2", "f1.t2");
  b.pair("f2.s1", "f2.t1");
  b.pair("f2.s2", "f2.t2");
  return g;
}

}  // namespace psteiner
