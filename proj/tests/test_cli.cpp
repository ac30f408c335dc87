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
// End-to-end tests of the psteiner binary: exit codes, exact stream output,
// and the files it writes. Everything runs against the real executable in a
// scratch directory.

#include <string>
#include <vector>

#include "doctest.h"
#include "psteiner/instance_io.hpp"
#include "psteiner/mixed_graph.hpp"
#include "subprocess.hpp"

using namespace psteiner;
using namespace psteiner::testing;

namespace {

std::string tmp(const std::string& name) { return scratch_dir() + "/" + name; }

int count_lines_with(const std::string& text, const std::string& needle) {
  int count = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    if (text.substr(start, end - start).find(needle) != std::string::npos) {
      ++count;
    }
    start = end + 1;
  }
  return count;
}

}  // namespace

TEST_CASE("compile: summary line, metadata sidecar, diagnostics") {
  const std::string out = tmp("appendix.psi");
  RunResult r = run_cli({"compile", fixture_path("appendix.formula"), out});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "compiled: 262 vertices, 347 arcs, 48 undirected edges, 78 pairs\n");
  CHECK(r.err.empty());

  ParsedInstance parsed = parse_instance(slurp(out));
  CHECK(parsed.instance.graph().num_vertices() == 262);
  REQUIRE(parsed.metadata.has_value());
  CHECK(parsed.metadata->variables.size() == 4);

  SUBCASE("a broken formula reports its position and exits 2") {
    const std::string bad = tmp("bad.formula");
    spit(bad, "vars: A B\npos: A ~B\nneg: A B\n");
    RunResult e = run_cli({"compile", bad, tmp("bad.psi")});
    CHECK(e.exit_code == 2);
    CHECK(e.out.empty());
    CHECK(e.err.find("error:") != std::string::npos);
    CHECK(e.err.find("line 2") != std::string::npos);
  }

  SUBCASE("a crossing formula is rejected with the witness variable") {
    const std::string crossing = tmp("crossing.formula");
    spit(crossing,
         "vars: A B C D\npos: A B C\npos: B C D\nneg: A B\nneg: C D\n");
    RunResult e = run_cli({"compile", crossing, tmp("crossing.psi")});
    CHECK(e.exit_code == 2);
    CHECK(e.err.find("cross") != std::string::npos);
  }

  SUBCASE("missing input exits 2") {
    RunResult e = run_cli({"compile", tmp("nonexistent.formula"), out});
    CHECK(e.exit_code == 2);
    CHECK(e.err.find("cannot open") != std::string::npos);
  }
}

TEST_CASE("solve and verify form a closed loop") {
  const std::string instance = tmp("loop.psi");
  const std::string witness = tmp("loop.wit");
  REQUIRE(run_cli({"compile", fixture_path("appendix.formula"), instance})
              .exit_code == 0);

  RunResult s = run_cli({"solve", instance, "--witness", witness});
  CHECK(s.exit_code == 0);
  CHECK(s.out == "SAT\n");
  CHECK(s.err == "stats: nodes=7 propagations=42 peak-depth=6\n");

  RunResult v = run_cli({"verify", instance, witness});
  CHECK(v.exit_code == 0);
  CHECK(v.out == "valid\n");

  SUBCASE("flipping one chain edge invalidates the witness") {
    // Edge 0 belongs to the first variable gadget's chain; any deviation
    // from the two rotations strands that gadget's own pairs.
    std::string text = slurp(witness);
    std::size_t pos = text.find('\n') + 1;
    text[pos] = text[pos] == 'F' ? 'R' : 'F';
    const std::string broken = tmp("loop-broken.wit");
    spit(broken, text);
    RunResult b = run_cli({"verify", instance, broken});
    CHECK(b.exit_code == 1);
    CHECK(b.out == "invalid\n");
  }

  SUBCASE("a truncated witness is a usage error, not a verdict") {
    const std::string short_wit = tmp("loop-short.wit");
    spit(short_wit, "orientation 2\nFR\n");
    RunResult b = run_cli({"verify", instance, short_wit});
    CHECK(b.exit_code == 2);
    CHECK(b.err.find("48") != std::string::npos);
  }

  SUBCASE("an incomplete witness is a usage error") {
    std::string text = slurp(witness);
    text[text.find('\n') + 1] = 'U';
    const std::string unset = tmp("loop-unset.wit");
    spit(unset, text);
    RunResult b = run_cli({"verify", instance, unset});
    CHECK(b.exit_code == 2);
    CHECK(b.err.find("unset") != std::string::npos);
  }

  SUBCASE("plain backtracking gives the same verdict without propagation") {
    RunResult p = run_cli({"solve", instance, "--no-propagate"});
    CHECK(p.exit_code == 0);
    CHECK(p.out == "SAT\n");
    CHECK(p.err.find("propagations=0") != std::string::npos);
  }
}

TEST_CASE("solve: gadget files and unsatisfiable instances") {
  SUBCASE("the flip gadget solves to an antiparallel witness") {
    const std::string instance = tmp("flip.psi");
    const std::string witness = tmp("flip.wit");
    REQUIRE(run_cli({"gadget", "flip", instance}).exit_code == 0);
    RunResult s = run_cli({"solve", instance, "--witness", witness});
    CHECK(s.exit_code == 0);
    CHECK(s.out == "SAT\n");
    PartialOrientation po = parse_orientation(slurp(witness));
    REQUIRE(po.size() == 2);
    CHECK(po.state(0) == opposite(po.state(1)));
  }

  SUBCASE("a pair with no connecting path is UNSAT, exit 1") {
    MixedGraph g;
    VertexId a = g.add_vertex("a");
    VertexId b = g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge(a, b);
    const std::string instance = tmp("disconnected.psi");
    spit(instance, serialize_instance(Instance(std::move(g), {{0, 2}})));
    RunResult s = run_cli({"solve", instance});
    CHECK(s.exit_code == 1);
    CHECK(s.out == "UNSAT\n");
  }
}

TEST_CASE("equiv: verdict lines for both outcomes") {
  RunResult sat = run_cli({"equiv", fixture_path("appendix.formula")});
  CHECK(sat.exit_code == 0);
  CHECK(sat.out ==
        "formula: SAT\n"
        "instance: SAT\n"
        "decoded witness satisfies the formula\n"
        "equivalent\n");

  RunResult unsat = run_cli({"equiv", fixture_path("unsat3.formula")});
  CHECK(unsat.exit_code == 0);
  CHECK(unsat.out ==
        "formula: UNSAT\n"
        "instance: UNSAT\n"
        "equivalent\n");
}

TEST_CASE("export-dot: one red undirected line per edge") {
  SUBCASE("flip gadget") {
    const std::string instance = tmp("flip-dot.psi");
    const std::string dot = tmp("flip.dot");
    REQUIRE(run_cli({"gadget", "flip", instance}).exit_code == 0);
    CHECK(run_cli({"export-dot", instance, dot}).exit_code == 0);
    std::string text = slurp(dot);
    CHECK(count_lines_with(text, "dir=none") == 2);
    CHECK(count_lines_with(text, "pos=\"") == 8);
  }

  SUBCASE("compiled appendix instance") {
    const std::string instance = tmp("appendix-dot.psi");
    const std::string dot = tmp("appendix.dot");
    REQUIRE(run_cli({"compile", fixture_path("appendix.formula"), instance})
                .exit_code == 0);
    CHECK(run_cli({"export-dot", instance, dot}).exit_code == 0);
    CHECK(count_lines_with(slurp(dot), "dir=none") == 48);
  }

  SUBCASE("missing input exits 2") {
    CHECK(run_cli({"export-dot", tmp("no-such.psi"), tmp("x.dot")})
              .exit_code == 2);
  }
}

TEST_CASE("gadget: parameter handling") {
  SUBCASE("flip writes an eight-vertex instance") {
    const std::string out = tmp("gadget-flip.psi");
    CHECK(run_cli({"gadget", "flip", out}).exit_code == 0);
    ParsedInstance parsed = parse_instance(slurp(out));
    CHECK(parsed.instance.graph().num_vertices() == 8);
    CHECK(!parsed.metadata.has_value());
  }

  SUBCASE("variable takes its two occurrence counts") {
    const std::string out = tmp("gadget-var.psi");
    CHECK(run_cli({"gadget", "variable", "3", "2", out}).exit_code == 0);
    ParsedInstance parsed = parse_instance(slurp(out));
    CHECK(parsed.instance.graph().num_vertices() == 14);
    CHECK(parsed.instance.graph().num_edges() == 5);
  }

  SUBCASE("clause gadgets honor --side") {
    const std::string out = tmp("gadget-clause.psi");
    CHECK(run_cli({"gadget", "clause3", "--side", "neg", out}).exit_code == 0);
    CHECK(parse_instance(slurp(out)).instance.graph().num_vertices() == 30);
    CHECK(run_cli({"gadget", "clause2", "--side", "sideways", out})
              .exit_code == 2);
  }

  SUBCASE("bad parameters exit 2") {
    CHECK(run_cli({"gadget", "variable", "0", "1", tmp("g.psi")}).exit_code ==
          2);
    CHECK(run_cli({"gadget", "variable", "3", tmp("g.psi")}).exit_code == 2);
    CHECK(run_cli({"gadget", "variable", "two", "1", tmp("g.psi")})
              .exit_code == 2);
    CHECK(run_cli({"gadget", "moebius", tmp("g.psi")}).exit_code == 2);
    CHECK(run_cli({"gadget", "flip"}).exit_code == 2);
  }
}

TEST_CASE("process contract: help, no arguments, environment") {
  CHECK(run_cli({"--help"}).exit_code == 0);
  CHECK(run_cli({}).exit_code == 2);

  const std::string instance = tmp("env.psi");
  REQUIRE(run_cli({"gadget", "flip", instance}).exit_code == 0);
  CHECK(run_cli({"solve", instance}, {"PSTEINER_THREADS=4"}).exit_code == 0);
  for (const char* value : {"banana", "0", "-3", ""}) {
    CAPTURE(value);
    RunResult r = run_cli({"solve", instance},
                          {std::string("PSTEINER_THREADS=") + value});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("PSTEINER_THREADS") != std::string::npos);
  }
}

TEST_CASE("determinism: identical runs produce identical bytes") {
  const std::string out_a = tmp("det-a.psi");
  const std::string out_b = tmp("det-b.psi");
  RunResult a = run_cli({"compile", fixture_path("appendix.formula"), out_a});
  RunResult b = run_cli({"compile", fixture_path("appendix.formula"), out_b});
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(slurp(out_a) == slurp(out_b));

  const std::string wit_a = tmp("det-a.wit");
  const std::string wit_b = tmp("det-b.wit");
  RunResult sa = run_cli({"solve", out_a, "--witness", wit_a});
  RunResult sb = run_cli({"solve", out_a, "--witness", wit_b});
  CHECK(sa.out == sb.out);
  CHECK(sa.err == sb.err);
  CHECK(slurp(wit_a) == slurp(wit_b));
}
