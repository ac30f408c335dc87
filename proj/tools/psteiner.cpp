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
// psteiner: compile planar monotone 3-SAT formulas into Steiner orientation
// instances, solve and verify them, and export gadgets and drawings.
//
// Exit codes: 0 = yes/success, 1 = no (UNSAT, invalid witness,
// non-equivalent), 2 = usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psteiner/formula.hpp"
#include "psteiner/gadgets.hpp"
#include "psteiner/instance_io.hpp"
#include "psteiner/layout.hpp"
#include "psteiner/reachability.hpp"
#include "psteiner/reduction.hpp"
#include "psteiner/solver.hpp"

namespace {

using namespace psteiner;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

// Usage/I-O failures funnel through this; the caller maps it to exit 2.
struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot open '" + path + "' for reading"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw UsageError{"error while reading '" + path + "'"};
  return std::move(buffer).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{"cannot open '" + path + "' for writing"};
  out << content;
  out.flush();
  if (!out) throw UsageError{"error while writing '" + path + "'"};
}

// The solver is sequential; the variable is still validated so scripts that
// set it get an early diagnostic rather than silent acceptance of garbage.
void check_thread_env() {
  const char* raw = std::getenv("PSTEINER_THREADS");
  if (raw == nullptr) return;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (*raw == '\0' || *end != '\0' || value < 1) {
    throw UsageError{std::string("PSTEINER_THREADS must be a positive "
                                 "integer, got '") +
                     raw + "'"};
  }
}

Formula load_formula(const std::string& path) {
  return parse_formula(read_file(path));
}

ParsedInstance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

int cmd_compile(const std::string& formula_path,
                const std::string& out_path) {
  Formula formula = load_formula(formula_path);
  Layout layout = validate_layout(formula);
  CompileResult compiled = compile(formula, layout);
  write_file(out_path, serialize_instance(compiled.instance,
                                          &compiled.metadata));
  const MixedGraph& g = compiled.instance.graph();
  std::cout << "compiled: " << g.num_vertices() << " vertices, "
            << g.num_arcs() << " arcs, " << g.num_edges()
            << " undirected edges, " << compiled.instance.pairs().size()
            << " pairs\n";
  return kYes;
}

int cmd_solve(const std::string& instance_path,
              const std::optional<std::string>& witness_path,
              bool no_propagate) {
  ParsedInstance parsed = load_instance(instance_path);
  SolveOptions options;
  options.use_propagation = !no_propagate;
  SolveResult result = solve(parsed.instance, options);
  std::cerr << "stats: nodes=" << result.stats.nodes
            << " propagations=" << result.stats.propagations
            << " peak-depth=" << result.stats.peak_depth << "\n";
  if (result.status != Status::Satisfiable) {
    std::cout << "UNSAT\n";
    return kNo;
  }
  std::cout << "SAT\n";
  if (witness_path) {
    write_file(*witness_path, serialize_orientation(*result.witness));
  }
  return kYes;
}

int cmd_verify(const std::string& instance_path,
               const std::string& witness_path) {
  ParsedInstance parsed = load_instance(instance_path);
  PartialOrientation witness = parse_orientation(read_file(witness_path));
  if (witness.size() != parsed.instance.graph().num_edges()) {
    throw UsageError{"witness has " + std::to_string(witness.size()) +
                     " edges, instance has " +
                     std::to_string(parsed.instance.graph().num_edges())};
  }
  if (!witness.total()) {
    throw UsageError{"witness leaves edges unset"};
  }
  if (!verify_orientation(parsed.instance, witness)) {
    std::cout << "invalid\n";
    return kNo;
  }
  std::cout << "valid\n";
  return kYes;
}

int cmd_equiv(const std::string& formula_path) {
  Formula formula = load_formula(formula_path);
  EquivReport report = check_equivalence(formula);
  std::cout << "formula: "
            << (report.formula_satisfiable ? "SAT" : "UNSAT") << "\n";
  std::cout << "instance: "
            << (report.instance_satisfiable ? "SAT" : "UNSAT") << "\n";
  if (report.instance_satisfiable) {
    std::cout << "decoded witness "
              << (report.decoded_ok ? "satisfies" : "does not satisfy")
              << " the formula\n";
  }
  std::cout << (report.equivalent ? "equivalent" : "NOT EQUIVALENT") << "\n";
  return report.equivalent ? kYes : kNo;
}

int cmd_export_dot(const std::string& instance_path,
                   const std::string& out_path) {
  ParsedInstance parsed = load_instance(instance_path);
  write_file(out_path, to_dot(parsed.instance));
  return kYes;
}

// Trailing arguments are <numeric params...> <out-file>; splitting them by
// hand keeps the natural `gadget variable 3 2 out.psi` word order.
int cmd_gadget(const std::string& kind, const std::vector<std::string>& args,
               const std::string& side) {
  if (args.empty()) {
    throw UsageError{"gadget wants an output file"};
  }
  const std::string& out_path = args.back();
  std::vector<int> params;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    char* end = nullptr;
    long value = std::strtol(args[i].c_str(), &end, 10);
    if (args[i].empty() || *end != '\0') {
      throw UsageError{"gadget parameter '" + args[i] +
                       "' is not an integer"};
    }
    params.push_back(static_cast<int>(value));
  }
  auto want_params = [&](std::size_t count) {
    if (params.size() != count) {
      throw UsageError{"gadget '" + kind + "' wants " +
                       std::to_string(count) + " numeric parameters, got " +
                       std::to_string(params.size())};
    }
  };
  Side clause_side = side == "neg" ? Side::Negative : Side::Positive;
  GadgetGraph gadget;
  if (kind == "flip") {
    want_params(0);
    gadget = build_flip();
  } else if (kind == "variable") {
    want_params(2);
    gadget = build_variable(params[0], params[1]);
  } else if (kind == "clause3") {
    want_params(0);
    gadget = build_clause3(clause_side);
  } else if (kind == "clause2") {
    want_params(0);
    gadget = build_clause2(clause_side);
  } else if (kind == "edge") {
    want_params(0);
    gadget = build_edge_gadget();
  } else {
    throw UsageError{"unknown gadget kind '" + kind +
                     "' (want flip, variable, clause3, clause2, or edge)"};
  }
  write_file(out_path, serialize_instance(to_instance(gadget)));
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Steiner orientation toolkit: planar monotone 3-SAT reductions on "
      "mixed graphs"};
  app.require_subcommand(1);

  std::string formula_path, instance_path, witness_path, out_path, kind;
  std::optional<std::string> witness_out;
  bool no_propagate = false;
  std::string side = "pos";
  std::vector<std::string> gadget_args;

  CLI::App* compile_cmd = app.add_subcommand(
      "compile", "Compile a formula into an instance with metadata");
  compile_cmd->add_option("formula", formula_path, "formula file")
      ->required();
  compile_cmd->add_option("out", out_path, "output instance file")
      ->required();

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Decide orientability of an instance");
  solve_cmd->add_option("instance", instance_path, "instance file")
      ->required();
  solve_cmd->add_option("--witness", witness_out,
                        "write a solving orientation here on SAT");
  solve_cmd->add_flag("--no-propagate", no_propagate,
                      "disable unit propagation (plain backtracking)");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check a total orientation against an instance");
  verify_cmd->add_option("instance", instance_path, "instance file")
      ->required();
  verify_cmd->add_option("witness", witness_path, "orientation file")
      ->required();

  CLI::App* equiv_cmd = app.add_subcommand(
      "equiv",
      "Cross-check formula satisfiability against the compiled instance");
  equiv_cmd->add_option("formula", formula_path, "formula file")->required();

  CLI::App* dot_cmd =
      app.add_subcommand("export-dot", "Write a Graphviz drawing");
  dot_cmd->add_option("instance", instance_path, "instance file")
      ->required();
  dot_cmd->add_option("out", out_path, "output .dot file")->required();

  CLI::App* gadget_cmd = app.add_subcommand(
      "gadget", "Write a standalone gadget as an instance file");
  gadget_cmd
      ->add_option("kind", kind,
                   "flip | variable | clause3 | clause2 | edge")
      ->required();
  gadget_cmd
      ->add_option("args", gadget_args,
                   "numeric parameters (variable: <p> <n>), then the "
                   "output instance file")
      ->required();
  gadget_cmd->add_option("--side", side, "clause side: pos | neg")
      ->check(CLI::IsMember({"pos", "neg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    check_thread_env();
    if (compile_cmd->parsed()) return cmd_compile(formula_path, out_path);
    if (solve_cmd->parsed()) {
      return cmd_solve(instance_path, witness_out, no_propagate);
    }
    if (verify_cmd->parsed()) return cmd_verify(instance_path, witness_path);
    if (equiv_cmd->parsed()) return cmd_equiv(formula_path);
    if (dot_cmd->parsed()) return cmd_export_dot(instance_path, out_path);
    if (gadget_cmd->parsed()) {
      return cmd_gadget(kind, gadget_args, side);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
