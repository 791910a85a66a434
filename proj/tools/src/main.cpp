// latdet: run detections, cross-check them against oracles, and generate
// random problem files.

#include <iostream>

#include "CLI11.hpp"
#include "latdet/parallel.hpp"
#include "latdet_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace latdet::cli;

  CLI::App app{"Equilevel and solitary predicate detection on distributive lattices"};
  app.require_subcommand(1);

  RunOptions run_options;
  run_options.workers = latdet::hardware_workers();
  std::string output;
  const auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--engine", run_options.engine, "Detection engine (default: the kind's first)");
    sub->add_option("--k", run_options.k, "Target level for levelk detection");
    sub->add_option("--workers", run_options.workers, "Threads per superstep (0 = sequential)")
        ->capture_default_str();
    sub->add_option("--budget-ideals", run_options.budget_ideals,
                    "Largest lattice an exhaustive search may scan")
        ->capture_default_str();
    sub->add_option("--output", output, "Write the document to this file");
    sub->add_flag("--inject-fault", run_options.inject_fault,
                  "Test fixture: corrupt the predicate so verification must disagree");
  };

  std::string run_kind;
  std::string run_path;
  CLI::App* run = app.add_subcommand("run", "Run one detection engine on a problem file");
  run->add_option("kind", run_kind, "Problem kind")->required();
  run->add_option("input", run_path, "Problem file")->required()->check(CLI::ExistingFile);
  add_shared(run);

  std::string verify_path;
  std::vector<std::string> verify_engines;
  CLI::App* verify = app.add_subcommand("verify", "Cross-check engines against oracles");
  verify->add_option("input", verify_path, "Problem file")->required()->check(CLI::ExistingFile);
  verify->add_option("--engines", verify_engines, "Engines to check (default: all applicable)");
  add_shared(verify);

  std::string gen_kind;
  GenOptions gen_options;
  std::string gen_output;
  CLI::App* gen = app.add_subcommand("gen", "Generate a deterministic random problem file");
  gen->add_option("kind", gen_kind, "Problem kind")->required();
  gen->add_option("--n", gen_options.n, "Instance size (agents, men, vectors, values)")->capture_default_str();
  gen->add_option("--vertices", gen_options.vertices, "Vertex count")->capture_default_str();
  gen->add_option("--dimension", gen_options.dimension, "Vector dimension")->capture_default_str();
  gen->add_option("--processes", gen_options.processes, "Process count")->capture_default_str();
  gen->add_option("--events", gen_options.events, "Maximum events per process")->capture_default_str();
  gen->add_option("--density", gen_options.density, "Edge or message probability")->capture_default_str();
  gen->add_option("--max-value", gen_options.max_value, "Largest value or coordinate")->capture_default_str();
  gen->add_flag("--unique-weights", gen_options.unique_weights, "Distinct edge weights");
  gen->add_option("--seed", gen_options.seed, "Random seed")->capture_default_str();
  gen->add_option("--output", gen_output, "Write the problem file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (!output.empty()) run_options.output = output;
  if (*run) return run_command(run_kind, run_path, run_options, std::cout, std::cerr);
  if (*verify) return verify_command(verify_path, verify_engines, run_options, std::cout, std::cerr);
  return gen_command(gen_kind, gen_options,
                     gen_output.empty() ? std::nullopt : std::optional<std::string>(gen_output),
                     std::cout, std::cerr);
}
