#include <iostream>

#include "CLI11.hpp"
#include "bitga/cli.hpp"

int main(int argc, char** argv) {
  using namespace bitga::cli;

  CLI::App app{"Deutsch-Jozsa as a geometric-product computation"};
  app.require_subcommand(1);

  RunOptions run_opts;
  std::string run_mode = "scalar-only";
  auto* run = app.add_subcommand("run", "Classify one Boolean function");
  run->add_option("--n", run_opts.n, "Input bit count (algebra has n+1 generators)")
      ->required();
  run->add_option("--f", run_opts.function,
                  "const0 | const1 | parity | table:<bits> | file:<path>");
  run->add_option("--rep", run_opts.rep, "Matrix representation: pauli | cartan");
  run->add_option("--mode", run_mode, "scalar-only | full")
      ->check(CLI::IsMember({"scalar-only", "full"}));
  run->add_flag("--show-matrix", run_opts.show_matrix,
                "Print the matrix image of the pipeline (n <= 3)");
  run->add_flag("--cross-check", run_opts.cross_check,
                "Also run the state-vector reference");
  run->add_flag("--json", run_opts.json, "Single JSON object output");

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Classify a family of functions");
  sweep->add_option("--n", sweep_opts.n, "Input bit count")->required();
  sweep->add_flag("--all", sweep_opts.all, "Every function on n bits (n <= 3)");
  sweep->add_flag("--promise", sweep_opts.promise,
                  "Both constants plus sampled balanced functions");
  sweep->add_option("--samples", sweep_opts.samples,
                    "Balanced functions to sample with --promise");
  sweep->add_option("--seed", sweep_opts.seed, "RNG seed");
  sweep->add_option("--threads", sweep_opts.threads, "Worker threads (0 = auto)");
  sweep->add_flag("--json", sweep_opts.json, "JSON lines output");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Randomized algebra property checks");
  verify->add_option("--m", verify_opts.m, "Generator count (<= 12)");
  verify->add_option("--trials", verify_opts.trials, "Trials per check");
  verify->add_option("--seed", verify_opts.seed, "RNG seed");
  verify->add_flag("--json", verify_opts.json, "JSON output");

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Time the pipeline stages");
  bench->add_option("--n", bench_opts.n, "Input bit count")->required();
  bench->add_option("--mode", bench_opts.mode, "scalar-only | full");
  bench->add_option("--f", bench_opts.function, "Function spec");
  bench->add_flag("--json", bench_opts.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*run) {
    run_opts.mode = run_mode == "full" ? bitga::PipelineMode::FullProduct
                                       : bitga::PipelineMode::ScalarOnly;
    return cmd_run(run_opts, std::cout, std::cerr);
  }
  if (*sweep) return cmd_sweep(sweep_opts, std::cout, std::cerr);
  if (*verify) return cmd_verify(verify_opts, std::cout, std::cerr);
  if (*bench) return cmd_bench(bench_opts, std::cout, std::cerr);
  return kExitUsage;
}
