#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "statemap/cli/commands.hpp"
#include "statemap/errors.hpp"

using namespace statemap::cli;

int main(int argc, char** argv) {
  CLI::App app{"statemap: closed-form single-exponential unitaries between pure states"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  double tolerance = 0.0;
  auto* tol_opt = app.add_option("--tolerance", tolerance, "Override default residual thresholds");
  app.add_option("--seed", global.seed, "Seed for randomized commands");
  app.add_option("--epsilon", global.epsilon, "Relative case-classification threshold")
      ->capture_default_str();

  MapOptions map_opts;
  std::string map_branch = "short";
  auto* map_cmd = app.add_subcommand("map", "Solve the mapping unitary for a state pair file");
  map_cmd->add_option("input", map_opts.input, "State pair JSON file")->required();
  map_cmd->add_option("--branch", map_branch, "short | long")->capture_default_str();
  map_cmd->add_flag("--emit-matrix", map_opts.emit_matrix, "Include the dense unitary");
  map_cmd->add_flag("--oracle", map_opts.oracle, "Compare against dense matrix exponential");
  map_cmd->add_option("--output,-o", map_opts.output, "Write the report to a file");

  ApplyOptions apply_opts;
  std::string apply_branch = "short";
  auto* apply_cmd = app.add_subcommand("apply", "Apply the mapping unitary to a vector");
  apply_cmd->add_option("input", apply_opts.input, "State pair JSON file")->required();
  apply_cmd->add_option("vector", apply_opts.vector, "Vector JSON file")->required();
  apply_cmd->add_option("--theta", apply_opts.theta, "Angle override (radians)");
  apply_cmd->add_option("--branch", apply_branch, "short | long")->capture_default_str();

  VerifyOptions verify_opts;
  std::vector<std::string> random_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("input", verify_opts.input, "State pair JSON file");
  verify_cmd->add_option("--random", random_args, "DIMS TRIALS SEED, e.g. --random 2,4,8 100 42")
      ->expected(3);
  verify_cmd->add_option("--probes", verify_opts.probes, "Random probe vectors per pair")
      ->capture_default_str();
  verify_cmd->add_option("--output,-o", verify_opts.output, "Write the report to a file");

  BenchOptions bench_opts;
  std::string bench_dims;
  bool skip_gs = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time closed form vs dense exponential");
  bench_cmd->add_option("--dims", bench_dims, "Comma-separated dimensions")->required();
  bench_cmd->add_option("--trials", bench_opts.trials, "Trials per dimension")->capture_default_str();
  bench_cmd->add_flag("--no-gram-schmidt", skip_gs, "Skip the Gram-Schmidt baseline");
  bench_cmd->add_option("--output,-o", bench_opts.output, "Write the JSON report to a file");
  bench_cmd->add_option("--csv", bench_opts.csv, "Also write a CSV report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitInputError;
  }
  if (*tol_opt) global.tolerance = tolerance;

  try {
    if (*map_cmd) {
      map_opts.branch = parse_branch(map_branch);
      return run_map(map_opts, global, std::cout, std::cerr);
    }
    if (*apply_cmd) {
      apply_opts.branch = parse_branch(apply_branch);
      return run_apply(apply_opts, global, std::cout, std::cerr);
    }
    if (*verify_cmd) {
      if (!random_args.empty()) {
        verify_opts.random_dims = parse_dims(random_args[0]);
        verify_opts.trials = std::stoul(random_args[1]);
        verify_opts.seed = std::stoull(random_args[2]);
      }
      return run_verify(verify_opts, global, std::cout, std::cerr);
    }
    if (*bench_cmd) {
      bench_opts.dims = parse_dims(bench_dims);
      bench_opts.gram_schmidt = !skip_gs;
      return run_bench(bench_opts, global, std::cout, std::cerr);
    }
  } catch (const statemap::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid number: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
