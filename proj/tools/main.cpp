#include <iostream>

#include "CLI11.hpp"
#include "normsplit/cli.hpp"
#include "normsplit/scenarios.hpp"

namespace {

void add_common_flags(CLI::App& cmd, normsplit::cli::CommandFlags& flags, std::string& x0,
                      std::string& w) {
  cmd.add_option("--max-iter", flags.max_iter, "iteration budget per phase");
  cmd.add_option("--tol-v", flags.tol_v, "window tolerance of the v estimate");
  cmd.add_option("--tol-fix", flags.tol_fix, "fixed-point residual tolerance");
  cmd.add_option("--x0", x0, "starting point, comma separated");
  cmd.add_option("--w", w, "solve the w-perturbed problem instead of the normal problem");
  cmd.add_option("--trace", flags.trace_path, "write the iteration trace as CSV");
  cmd.add_option("--seed", flags.seed, "seed for sampled checks");
  cmd.add_option("--json", flags.json_path, "write the JSON report to this path");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = normsplit::cli;
  CLI::App app{"Normal solutions of 0 ∈ Ax + Bx via the Douglas–Rachford operator"};
  app.require_subcommand(1);

  cli::CommandFlags flags;
  std::string x0;
  std::string w;
  std::string target;

  auto* solve = app.add_subcommand("solve", "solve the problem in a JSON problem file");
  solve->add_option("problem", target, "problem file")->required();
  add_common_flags(*solve, flags, x0, w);

  auto* scenario = app.add_subcommand("scenario", "run a built-in scenario against its oracle");
  scenario->add_option("name", target, "scenario name");
  bool list = false;
  scenario->add_flag("--list", list, "list scenario names");
  add_common_flags(*scenario, flags, x0, w);

  auto* duality = app.add_subcommand("duality-check", "check T = T_dual and the psi bijection");
  duality->add_option("problem", target, "problem file")->required();
  add_common_flags(*duality, flags, x0, w);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }

  try {
    if (!x0.empty()) flags.x0 = cli::parse_vector_flag(x0);
    if (!w.empty()) flags.w = cli::parse_vector_flag(w);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInputError;
  }

  if (*solve) return cli::cmd_solve(target, flags, std::cout, std::cerr);
  if (*duality) return cli::cmd_duality_check(target, flags, std::cout, std::cerr);
  if (list) {
    for (const auto& name : normsplit::scenario_names()) std::cout << name << "\n";
    return 0;
  }
  if (target.empty()) {
    std::cerr << "error: scenario name required (see --list)\n";
    return cli::kExitInputError;
  }
  return cli::cmd_scenario(target, flags, std::cout, std::cerr);
}
