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

#include "psteiner/instance_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace psteiner {

namespace {

// %.17g keeps every double bit-exact through a strtod round-trip while
// printing 1.5 as "1.5", not a 17-digit tail.
std::string fmt_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string fmt_element(const FormulaElement& element) {
  std::string out;
  if (element.variable > 0) out += "x" + std::to_string(element.variable);
  if (element.clause >= 0) out += "c" + std::to_string(element.clause);
  if (out.empty()) out = "-";
  return out;
}

struct Line {
  std::vector<std::string> tokens;
  int number = 0;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream fields(raw);
    Line line;
    line.number = number;
    std::string token;
    while (fields >> token) line.tokens.push_back(std::move(token));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& token, int line) {
  const char* begin = token.c_str();
  char* end = nullptr;
  long value = std::strtol(begin, &end, 10);
  if (end != begin + token.size() || value < -1000000000 ||
      value > 1000000000) {
    throw InstanceParseError("expected an integer, got '" + token + "'", line);
  }
  return static_cast<int>(value);
}

double parse_double(const std::string& token, int line) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end != begin + token.size()) {
    throw InstanceParseError("expected a number, got '" + token + "'", line);
  }
  return value;
}

GadgetKind parse_kind(const std::string& token, int line) {
  for (GadgetKind kind :
       {GadgetKind::Flip, GadgetKind::Variable, GadgetKind::Clause3,
        GadgetKind::Clause2, GadgetKind::Edge}) {
    if (to_string(kind) == token) return kind;
  }
  throw InstanceParseError("unknown gadget kind '" + token + "'", line);
}

FormulaElement parse_element(const std::string& token, int line) {
  FormulaElement element;
  if (token == "-") return element;
  const char* p = token.c_str();
  char* end = nullptr;
  if (*p == 'x') {
    element.variable = static_cast<int>(std::strtol(p + 1, &end, 10));
    p = end;
  }
  if (*p == 'c') {
    element.clause = static_cast<int>(std::strtol(p + 1, &end, 10));
    p = end;
  }
  if (p != token.c_str() + token.size() || (element.variable <= 0 &&
                                            element.clause < 0)) {
    throw InstanceParseError("malformed formula element '" + token + "'",
                             line);
  }
  return element;
}

void want_tokens(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw InstanceParseError(
        "'" + line.tokens[0] + "' line wants " + std::to_string(count - 1) +
            " fields, got " + std::to_string(line.tokens.size() - 1),
        line.number);
  }
}

}  // namespace

InstanceParseError::InstanceParseError(const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

std::string serialize_instance(const Instance& instance,
                               const ReductionMetadata* metadata) {
  const MixedGraph& g = instance.graph();
  std::string out;
  out += "psi " + std::to_string(g.num_vertices()) + " " +
         std::to_string(g.num_arcs()) + " " + std::to_string(g.num_edges()) +
         " " + std::to_string(instance.pairs().size()) + "\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const Vertex& vertex = g.vertex(v);
    out += "v " + std::to_string(v);
    if (vertex.pos) {
      out += " " + fmt_double(vertex.pos->x) + " " + fmt_double(vertex.pos->y);
    }
    if (!vertex.label.empty()) out += " " + vertex.label;
    out += "\n";
  }
  for (const Arc& a : g.arcs()) {
    out += "a " + std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out += "e " + std::to_string(e) + " " + std::to_string(g.edge(e).u) + " " +
           std::to_string(g.edge(e).w) + "\n";
  }
  for (const TerminalPair& p : instance.pairs()) {
    out += "p " + std::to_string(p.source) + " " + std::to_string(p.target) +
           "\n";
  }
  if (metadata != nullptr) {
    for (EdgeId e = 0; e < static_cast<EdgeId>(metadata->edges.size()); ++e) {
      const EdgeMeta& m = metadata->edges[e];
      out += "m e " + std::to_string(e) + " " + to_string(m.gadget) + " " +
             m.role + " " + fmt_element(m.element) + "\n";
    }
    for (std::size_t i = 0; i < metadata->pairs.size(); ++i) {
      const PairMeta& m = metadata->pairs[i];
      out += "m p " + std::to_string(i) + " " + to_string(m.gadget) + " " +
             fmt_element(m.element) + "\n";
    }
    for (std::size_t i = 0; i < metadata->variables.size(); ++i) {
      for (const char* side : {"top", "bottom"}) {
        const auto& chain = side[0] == 't' ? metadata->variables[i].top
                                           : metadata->variables[i].bottom;
        out += "m v " + std::to_string(i + 1) + " " + side;
        for (EdgeId e : chain) out += " " + std::to_string(e);
        out += "\n";
      }
    }
  }
  return out;
}

ParsedInstance parse_instance(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "psi") {
    throw InstanceParseError("expected 'psi' header", lines.empty()
                                                          ? 0
                                                          : lines[0].number);
  }
  want_tokens(lines[0], 5);
  const int want_v = parse_int(lines[0].tokens[1], lines[0].number);
  const int want_a = parse_int(lines[0].tokens[2], lines[0].number);
  const int want_e = parse_int(lines[0].tokens[3], lines[0].number);
  const int want_p = parse_int(lines[0].tokens[4], lines[0].number);

  MixedGraph graph;
  std::vector<TerminalPair> pairs;
  bool has_meta = false;
  std::map<EdgeId, EdgeMeta> edge_meta;
  std::map<int, PairMeta> pair_meta;
  std::map<std::pair<int, bool>, std::vector<EdgeId>> chains;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& head = line.tokens[0];
    try {
      if (head == "v") {
        // `v <id> [<x> <y>] [<label>]`, shape decided by field count.
        if (line.tokens.size() < 2 || line.tokens.size() > 5) {
          throw InstanceParseError("'v' line wants 1 to 4 fields",
                                   line.number);
        }
        if (parse_int(line.tokens[1], line.number) != graph.num_vertices()) {
          throw InstanceParseError("vertex ids must be dense and ascending",
                                   line.number);
        }
        std::optional<Point> pos;
        std::string label;
        if (line.tokens.size() >= 4) {
          pos = Point{parse_double(line.tokens[2], line.number),
                      parse_double(line.tokens[3], line.number)};
          if (line.tokens.size() == 5) label = line.tokens[4];
        } else if (line.tokens.size() == 3) {
          label = line.tokens[2];
        }
        graph.add_vertex(label, pos);
      } else if (head == "a") {
        want_tokens(line, 3);
        graph.add_arc(parse_int(line.tokens[1], line.number),
                      parse_int(line.tokens[2], line.number));
      } else if (head == "e") {
        want_tokens(line, 4);
        if (parse_int(line.tokens[1], line.number) != graph.num_edges()) {
          throw InstanceParseError("edge ids must be dense and ascending",
                                   line.number);
        }
        graph.add_edge(parse_int(line.tokens[2], line.number),
                       parse_int(line.tokens[3], line.number));
      } else if (head == "p") {
        want_tokens(line, 3);
        pairs.push_back({parse_int(line.tokens[1], line.number),
                         parse_int(line.tokens[2], line.number)});
      } else if (head == "m") {
        has_meta = true;
        if (line.tokens.size() < 2) {
          throw InstanceParseError("bare 'm' line", line.number);
        }
        const std::string& what = line.tokens[1];
        if (what == "e") {
          want_tokens(line, 6);
          EdgeId id = parse_int(line.tokens[2], line.number);
          if (!edge_meta
                   .emplace(id, EdgeMeta{parse_kind(line.tokens[3],
                                                    line.number),
                                         line.tokens[4],
                                         parse_element(line.tokens[5],
                                                       line.number)})
                   .second) {
            throw InstanceParseError(
                "duplicate metadata for edge " + std::to_string(id),
                line.number);
          }
        } else if (what == "p") {
          want_tokens(line, 5);
          int index = parse_int(line.tokens[2], line.number);
          if (!pair_meta
                   .emplace(index,
                            PairMeta{parse_kind(line.tokens[3], line.number),
                                     parse_element(line.tokens[4],
                                                   line.number)})
                   .second) {
            throw InstanceParseError(
                "duplicate metadata for pair " + std::to_string(index),
                line.number);
          }
        } else if (what == "v") {
          if (line.tokens.size() < 5) {
            throw InstanceParseError("'m v' line wants a variable, a side, "
                                     "and at least one edge id",
                                     line.number);
          }
          int var = parse_int(line.tokens[2], line.number);
          bool top;
          if (line.tokens[3] == "top") {
            top = true;
          } else if (line.tokens[3] == "bottom") {
            top = false;
          } else {
            throw InstanceParseError("chain side must be top or bottom",
                                     line.number);
          }
          auto [it, fresh] = chains.try_emplace({var, top});
          if (!fresh) {
            throw InstanceParseError("duplicate chain for variable " +
                                         std::to_string(var),
                                     line.number);
          }
          for (std::size_t k = 4; k < line.tokens.size(); ++k) {
            it->second.push_back(parse_int(line.tokens[k], line.number));
          }
        } else {
          throw InstanceParseError("unknown metadata line 'm " + what + "'",
                                   line.number);
        }
      } else {
        throw InstanceParseError("unknown line type '" + head + "'",
                                 line.number);
      }
    } catch (const std::invalid_argument& e) {
      // Graph construction rejected the ids; keep the position.
      throw InstanceParseError(e.what(), line.number);
    }
  }

  if (graph.num_vertices() != want_v || graph.num_arcs() != want_a ||
      graph.num_edges() != want_e ||
      static_cast<int>(pairs.size()) != want_p) {
    throw InstanceParseError("header counts do not match file contents", 0);
  }

  std::optional<ReductionMetadata> metadata;
  if (has_meta) {
    ReductionMetadata meta;
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
      auto it = edge_meta.find(e);
      if (it == edge_meta.end()) {
        throw InstanceParseError(
            "metadata missing edge " + std::to_string(e), 0);
      }
      meta.edges.push_back(std::move(it->second));
    }
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
      auto it = pair_meta.find(i);
      if (it == pair_meta.end()) {
        throw InstanceParseError(
            "metadata missing pair " + std::to_string(i), 0);
      }
      meta.pairs.push_back(std::move(it->second));
    }
    if (edge_meta.size() != meta.edges.size() ||
        pair_meta.size() != meta.pairs.size()) {
      throw InstanceParseError("metadata refers to elements out of range", 0);
    }
    int num_chain_vars = static_cast<int>(chains.size()) / 2;
    for (int var = 1; var <= num_chain_vars; ++var) {
      VariableChains vc;
      for (bool top : {true, false}) {
        auto it = chains.find({var, top});
        if (it == chains.end()) {
          throw InstanceParseError(
              "metadata missing a chain for variable " + std::to_string(var),
              0);
        }
        for (EdgeId e : it->second) {
          if (e < 0 || e >= graph.num_edges()) {
            throw InstanceParseError(
                "chain refers to unknown edge " + std::to_string(e), 0);
          }
        }
        (top ? vc.top : vc.bottom) = std::move(it->second);
      }
      meta.variables.push_back(std::move(vc));
    }
    if (static_cast<int>(chains.size()) != 2 * num_chain_vars) {
      throw InstanceParseError("chain variables must be dense from 1", 0);
    }
    metadata = std::move(meta);
  }

  try {
    return {Instance(std::move(graph), std::move(pairs)),
            std::move(metadata)};
  } catch (const std::invalid_argument& e) {
    throw InstanceParseError(e.what(), 0);
  }
}

std::string to_dot(const Instance& instance) {
  const MixedGraph& g = instance.graph();
  std::vector<bool> is_source(g.num_vertices()), is_target(g.num_vertices());
  for (const TerminalPair& p : instance.pairs()) {
    is_source[p.source] = true;
    is_target[p.target] = true;
  }
  std::string out = "digraph instance {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const Vertex& vertex = g.vertex(v);
    out += "  n" + std::to_string(v) + " [label=\"" +
           (vertex.label.empty() ? std::to_string(v) : vertex.label) + "\"";
    if (vertex.pos) {
      char buffer[64];
      std::snprintf(buffer, sizeof(buffer), ", pos=\"%g,%g!\"",
                    vertex.pos->x, vertex.pos->y);
      out += buffer;
    }
    if (is_source[v] && is_target[v]) {
      out += ", shape=hexagon";
    } else if (is_source[v]) {
      out += ", shape=diamond";
    } else if (is_target[v]) {
      out += ", shape=box";
    }
    out += "];\n";
  }
  for (const Arc& a : g.arcs()) {
    out += "  n" + std::to_string(a.tail) + " -> n" + std::to_string(a.head) +
           ";\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out += "  n" + std::to_string(g.edge(e).u) + " -> n" +
           std::to_string(g.edge(e).w) +
           " [dir=none, color=red, style=bold];\n";
  }
  out += "}\n";
  return out;
}

std::string serialize_orientation(const PartialOrientation& orientation) {
  return "orientation " + std::to_string(orientation.size()) + "\n" +
         orientation.to_string() + "\n";
}

PartialOrientation parse_orientation(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "orientation") {
    throw InstanceParseError("expected 'orientation' header",
                             lines.empty() ? 0 : lines[0].number);
  }
  want_tokens(lines[0], 2);
  const int size = parse_int(lines[0].tokens[1], lines[0].number);
  if (size == 0 && lines.size() == 1) return PartialOrientation(0);
  if (lines.size() != 2 || lines[1].tokens.size() != 1) {
    throw InstanceParseError(
        "orientation wants exactly one data line after the header",
        lines.size() > 1 ? lines[1].number : 0);
  }
  const std::string& word = lines[1].tokens[0];
  if (static_cast<int>(word.size()) != size) {
    throw InstanceParseError(
        "header declares " + std::to_string(size) + " edges, data line has " +
            std::to_string(word.size()),
        lines[1].number);
  }
  try {
    return PartialOrientation::from_string(word);
  } catch (const std::invalid_argument& e) {
    throw InstanceParseError(e.what(), lines[1].number);
  }
}

}  // namespace psteiner
