// pgraph — command-line front end for the two-successor graph rewriting
// machine. Subcommands: run, check, fmt, gadget verify, oracle.
//
// Exit codes: 0 success/halted/pass, 1 verification failure, 2 cycle
// detected, 3 step limit, 4 input or parse error. stdout carries data,
// stderr carries diagnostics.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <pgraph/gadgets.hpp>
#include <pgraph/graph.hpp>
#include <pgraph/machine.hpp>
#include <pgraph/op.hpp>
#include <pgraph/oracle.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitCycled = 2;
constexpr int kExitStepLimit = 3;
constexpr int kExitInputError = 4;

// Diagnostic carrying the file the failure belongs to.
struct InputError {
  std::string file;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError{path, "cannot open file"};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

pgraph::GraphState load_graph(const std::string& path) {
  try {
    return pgraph::decode_state(read_file(path));
  } catch (const pgraph::Error& e) {
    throw InputError{path, e.what()};
  }
}

pgraph::Composition load_program(const std::string& path) {
  try {
    return pgraph::parse_program(read_file(path));
  } catch (const pgraph::Error& e) {
    throw InputError{path, e.what()};
  }
}

struct RunArgs {
  std::string graph_file;
  std::string program_file;
  std::uint64_t max_steps = pgraph::RunLimits{}.max_steps;
  std::string trace = "none";
};

int cmd_run(const RunArgs& args) {
  const pgraph::GraphState initial = load_graph(args.graph_file);
  const pgraph::Composition program = load_program(args.program_file);

  pgraph::RunLimits limits;
  limits.max_steps = args.max_steps;
  const pgraph::TraceMode mode = args.trace == "none"   ? pgraph::TraceMode::none
                                 : args.trace == "hash" ? pgraph::TraceMode::hash
                                                        : pgraph::TraceMode::full;

  const pgraph::RunResult result = pgraph::run(initial, program, limits, mode);
  std::cout << pgraph::to_text(result.trace);

  if (const auto* halted = std::get_if<pgraph::Halted>(&result.outcome)) {
    std::cout << "halted steps=" << halted->steps << "\n";
    return kExitOk;
  }
  if (const auto* cycled = std::get_if<pgraph::Cycled>(&result.outcome)) {
    std::cout << "cycled prefix=" << cycled->prefix << " period=" << cycled->period << "\n";
    return kExitCycled;
  }
  const auto& limit = std::get<pgraph::StepLimit>(result.outcome);
  std::cout << "step-limit " << limit.steps << "\n";
  return kExitStepLimit;
}

int cmd_check(const std::string& graph_file, const std::string& program_file) {
  const pgraph::GraphState state = load_graph(graph_file);
  const pgraph::Composition program = load_program(program_file);
  if (pgraph::is_comp_fixed(state, program)) {
    std::cout << "fixed\n";
    return kExitOk;
  }
  std::cout << "not-fixed\n";
  return kExitVerifyFail;
}

int cmd_fmt(const std::string& program_file) {
  const pgraph::Composition program = load_program(program_file);
  std::cout << pgraph::print_program(program);
  return kExitOk;
}

int cmd_gadget_verify(const std::string& gate, std::size_t seeds) {
  using pgraph::gadgets::GateKind;
  const GateKind kind = gate == "not"   ? GateKind::Not
                        : gate == "and" ? GateKind::And
                        : gate == "or"  ? GateKind::Or
                                        : GateKind::Cond;
  const auto gadget = kind == GateKind::Cond ? pgraph::gadgets::build_cond_gadget()
                                             : pgraph::gadgets::build_gate(kind);
  const auto report = pgraph::gadgets::verify_gate(gadget, seeds);
  std::cout << pgraph::gadgets::to_text(report);
  return report.pass() ? kExitOk : kExitVerifyFail;
}

int cmd_oracle(std::size_t nodes, std::size_t max_path, std::uint64_t samples,
               std::uint64_t seed, bool dump) {
  pgraph::oracle::SweepBounds bounds;
  bounds.n = nodes;
  bounds.max_target_len = max_path;
  bounds.max_source_len = max_path;

  if (dump) {
    pgraph::oracle::dump_cases(bounds, std::cout);
  }

  const auto postconditions = pgraph::oracle::check_postconditions(bounds);
  const auto fixed_iff = pgraph::oracle::check_fixed_point_iff(bounds);
  const auto construction = pgraph::oracle::check_fixed_construction(bounds, samples, seed);

  std::cout << pgraph::oracle::to_text(postconditions, "postconditions");
  std::cout << pgraph::oracle::to_text(fixed_iff, "fixed-point-iff");
  std::cout << pgraph::oracle::to_text(construction, "fixed-construction");

  const bool pass = postconditions.pass() && fixed_iff.pass() && construction.pass();
  std::cout << (pass ? "PASS\n" : "FAIL\n");
  return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-successor graph rewriting machine"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "iterate the program until a fixed point");
  run_cmd->add_option("--graph", run_args.graph_file, "initial state (.pg)")->required();
  run_cmd->add_option("--program", run_args.program_file, "operation list (.pop)")->required();
  run_cmd->add_option("--max-steps", run_args.max_steps, "step limit")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--trace", run_args.trace, "trace verbosity")
      ->check(CLI::IsMember({"none", "hash", "full"}));

  std::string check_graph, check_program;
  auto* check_cmd = app.add_subcommand("check", "is the initial state a fixed point of T");
  check_cmd->add_option("--graph", check_graph, "state (.pg)")->required();
  check_cmd->add_option("--program", check_program, "operation list (.pop)")->required();

  std::string fmt_program;
  auto* fmt_cmd = app.add_subcommand("fmt", "print a program in canonical form");
  fmt_cmd->add_option("--program", fmt_program, "operation list (.pop)")->required();

  auto* gadget_cmd = app.add_subcommand("gadget", "boolean embeddings");
  gadget_cmd->require_subcommand(1);
  std::string gate;
  std::size_t seeds = 50;
  auto* verify_cmd = gadget_cmd->add_subcommand("verify", "check a gadget's truth table");
  verify_cmd->add_option("--gate", gate, "gadget to check")
      ->required()
      ->check(CLI::IsMember({"not", "and", "or", "cond"}));
  verify_cmd->add_option("--seeds", seeds, "don't-care fills per row")->check(CLI::PositiveNumber);

  std::size_t oracle_nodes = 2;
  std::size_t oracle_max_path = 3;
  std::uint64_t oracle_samples = 1000;
  std::uint64_t oracle_seed = 42;
  bool oracle_dump = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive semantic sweeps");
  oracle_cmd->add_option("--nodes", oracle_nodes, "node count")->check(CLI::Range(1, 3));
  oracle_cmd->add_option("--max-path", oracle_max_path, "max written path length")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--samples", oracle_samples, "fixed-construction sample count");
  oracle_cmd->add_option("--seed", oracle_seed, "fixed-construction RNG seed");
  oracle_cmd->add_flag("--dump", oracle_dump, "dump one case<TAB>status line per sweep case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << "pgraph: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_args);
    if (check_cmd->parsed()) return cmd_check(check_graph, check_program);
    if (fmt_cmd->parsed()) return cmd_fmt(fmt_program);
    if (verify_cmd->parsed()) return cmd_gadget_verify(gate, seeds);
    if (oracle_cmd->parsed())
      return cmd_oracle(oracle_nodes, oracle_max_path, oracle_samples, oracle_seed, oracle_dump);
  } catch (const InputError& e) {
    std::cerr << "pgraph: " << e.file << ": " << e.message << "\n";
    return kExitInputError;
  } catch (const pgraph::Error& e) {
    std::cerr << "pgraph: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
