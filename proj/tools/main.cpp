#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowdiag/beam.hpp"
#include "flowdiag/bench.hpp"
#include "flowdiag/datagen.hpp"
#include "flowdiag/dataset.hpp"
#include "flowdiag/exact.hpp"
#include "flowdiag/frontier.hpp"
#include "flowdiag/io.hpp"
#include "flowdiag/validate.hpp"

namespace {

using namespace flowdiag;

// Exit codes: 0 success / Valid, 1 Invalid / infeasible / dead end,
// 2 usage or input errors, 3 budget or cap overruns.
int exit_for(SolveStatus status) {
  switch (status) {
    case SolveStatus::solved: return 0;
    case SolveStatus::infeasible:
    case SolveStatus::beam_dead_end: return 1;
    case SolveStatus::budget_exceeded:
    case SolveStatus::cap_exceeded: return 3;
  }
  return 2;
}

void emit(const std::string& output, const std::string& text) {
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
}

std::string sibling_dot_path(const std::string& json_path) {
  const auto slash = json_path.find_last_of('/');
  const auto dot = json_path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return json_path + ".dot";
  return json_path.substr(0, dot) + ".dot";
}

struct BuildArgs {
  std::string dataset;
  std::string algo = "exact";
  std::string output;
  std::string dot;
  int beam_width = 1;
  bool dense = false;
  bool no_prune = false;
  double time_limit = 3600;
  long mem_limit_mib = 8192;
};

int run_build(const BuildArgs& args) {
  const Instance inst = make_instance(dataset_from_json(read_file(args.dataset)));
  SearchLimits limits{args.time_limit, args.mem_limit_mib * 1024};

  SolveResult res;
  if (args.algo == "exact") {
    ExactOptions o;
    o.limits = limits;
    o.monotone_pruning = !args.no_prune;
    res = solve_exact(inst, o);
  } else if (args.algo == "reference") {
    ReferenceOptions o;
    o.limits = limits;
    res = solve_reference(inst, o);
  } else if (args.algo == "frontier") {
    FrontierOptions o;
    o.limits = limits;
    o.dense_marking = args.dense;
    res = solve_frontier_independent(inst, o);
  } else if (args.algo == "frontier-sweep") {
    FrontierOptions o;
    o.limits = limits;
    o.dense_marking = args.dense;
    res = solve_frontier_dependent(inst, o);
  } else if (args.algo == "beam-seq" || args.algo == "beam-step") {
    BeamOptions o;
    o.limits = limits;
    o.width = args.beam_width;
    o.strategy = args.algo == "beam-seq" ? BeamStrategy::sequences : BeamStrategy::timesteps;
    res = solve_beam(inst, o);
  } else {
    std::cerr << "error: unknown algorithm " << args.algo << "\n";
    return 2;
  }

  std::cerr << "status " << to_string(res.status) << "\n";
  if (!res.solved()) {
    if (!res.detail.empty()) std::cerr << "detail " << res.detail << "\n";
    return exit_for(res.status);
  }
  const Solution& sol = *res.solution;
  char cpu[64];
  std::snprintf(cpu, sizeof cpu, "%.6f", sol.stats.cpu_seconds);
  std::cerr << "fd_size " << fd_size(sol.diagram) << "\n"
            << "edges " << sol.diagram.edges.size() << "\n"
            << "cpu_seconds " << cpu << "\n";

  emit(args.output, diagram_to_json(inst, sol.diagram, sol.certificates));
  std::string dot_path = args.dot;
  if (dot_path.empty() && !args.output.empty()) dot_path = sibling_dot_path(args.output);
  if (!dot_path.empty()) write_file(dot_path, to_dot(inst, sol.diagram));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"summarize sets of state sequences as minimal flow diagrams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "flowdiag 0.1.0");

  auto* gen = app.add_subcommand("generate", "sample a ring-chain benchmark dataset");
  int gen_m = 4, gen_n = 4, gen_k = 10;
  std::uint64_t gen_seed = 1;
  std::string gen_output;
  gen->add_option("-m,--sequences", gen_m, "number of sequences")->capture_default_str();
  gen->add_option("-n,--states", gen_n, "states per sequence")->capture_default_str();
  gen->add_option("-k,--criteria", gen_k, "ring nodes / criteria")->capture_default_str();
  gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();
  gen->add_option("-o,--output", gen_output, "dataset JSON path (default stdout)");

  auto* build = app.add_subcommand("build", "build a minimal flow diagram for a dataset");
  BuildArgs build_args;
  build->add_option("dataset", build_args.dataset, "dataset JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("--algo", build_args.algo,
                    "exact | reference | frontier | frontier-sweep | beam-seq | beam-step")
      ->capture_default_str();
  build->add_option("-o,--output", build_args.output, "diagram JSON path (default stdout)");
  build->add_option("--dot", build_args.dot,
                    "DOT path (default: output path with .dot extension)");
  build->add_option("--beam-width", build_args.beam_width, "beam width q")->capture_default_str();
  build->add_flag("--dense", build_args.dense, "dense marking grid for the frontier algorithms");
  build->add_flag("--no-prune", build_args.no_prune, "full successor enumeration in exact");
  build->add_option("--time-limit", build_args.time_limit, "CPU budget in seconds")
      ->capture_default_str();
  build->add_option("--mem-limit", build_args.mem_limit_mib, "memory budget in MiB")
      ->capture_default_str();

  auto* val = app.add_subcommand("validate", "check a diagram and its certificates");
  std::string val_dataset, val_diagram;
  val->add_option("dataset", val_dataset, "dataset JSON file")->required()->check(CLI::ExistingFile);
  val->add_option("diagram", val_diagram, "diagram JSON file")->required()->check(CLI::ExistingFile);

  auto* exp = app.add_subcommand("export-dot", "render diagram JSON as DOT");
  std::string exp_diagram, exp_output;
  std::vector<std::string> exp_significant;
  exp->add_option("diagram", exp_diagram, "diagram JSON file")->required()->check(CLI::ExistingFile);
  exp->add_option("-o,--output", exp_output, "DOT path (default stdout)");
  exp->add_option("--significant", exp_significant,
                  "criterion ids to fill grey (default SG SNG LB CFB)");

  auto* bench = app.add_subcommand("bench", "grid sweep over generated datasets, CSV out");
  BenchConfig config;
  std::string bench_output;
  bench->add_option("-m,--sequences", config.m, "sequences")->capture_default_str();
  bench->add_option("-n,--states", config.n, "states per sequence")->capture_default_str();
  bench->add_option("-k,--criteria", config.k, "ring nodes / criteria")->capture_default_str();
  bench->add_option("--vary", config.vary, "axis to vary: m | n | k")->capture_default_str();
  bench->add_option("--values", config.values, "values for the varied axis")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--algos", config.algos, "exact | frontier | beam-seq | beam-step")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--trials", config.trials, "trials per configuration")->capture_default_str();
  bench->add_option("--seed", config.seed, "base seed")->capture_default_str();
  bench->add_option("--beam-width", config.beam_width, "beam width q")->capture_default_str();
  bench->add_option("--time-limit", config.limits.max_cpu_seconds, "CPU budget in seconds")
      ->capture_default_str();
  auto mem_mib = config.limits.max_memory_kb / 1024;
  bench->add_option("--mem-limit", mem_mib, "memory budget in MiB")->capture_default_str();
  bench->add_option("-o,--output", bench_output, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      emit(gen_output, dataset_to_json(generate_dataset(gen_m, gen_n, gen_k, gen_seed)));
      return 0;
    }
    if (build->parsed()) return run_build(build_args);
    if (val->parsed()) {
      const Instance inst = make_instance(dataset_from_json(read_file(val_dataset)));
      const DiagramFile file = diagram_from_json(inst, read_file(val_diagram));
      const Validation v = validate(inst, file.diagram, file.certificates);
      if (v.valid) {
        std::cout << "Valid\n";
        return 0;
      }
      std::cout << "Invalid (" << to_string(v.clause) << "): " << v.detail << "\n";
      return 1;
    }
    if (exp->parsed()) {
      DotOptions options;
      if (!exp_significant.empty())
        options.significant = std::set<std::string>(exp_significant.begin(), exp_significant.end());
      emit(exp_output, dot_from_diagram_json(read_file(exp_diagram), options));
      return 0;
    }
    if (bench->parsed()) {
      config.limits.max_memory_kb = mem_mib * 1024;
      emit(bench_output, bench_csv(run_bench(config)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
