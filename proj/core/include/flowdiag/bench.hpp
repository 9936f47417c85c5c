#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flowdiag/solve.hpp"

namespace flowdiag {

/// Grid sweep in the style of the synthetic-benchmark methodology: fixed
/// defaults with one axis varied, several seeded trials per configuration.
struct BenchConfig {
  int m = 4;
  int n = 4;
  int k = 10;
  std::string vary = "m";  // m | n | k
  std::vector<int> values = {1, 2, 3, 4};
  std::vector<std::string> algos = {"exact", "frontier", "beam-seq", "beam-step"};
  int trials = 5;
  std::uint64_t seed = 1;
  int beam_width = 1;
  SearchLimits limits{3600.0, 8L * 1024 * 1024};  // 1 h CPU, 8 GiB
};

struct BenchRow {
  std::string algo;
  int m = 0;
  int n = 0;
  int k = 0;
  std::string trial;  // 1..T for raw rows, "mean" / "range" for aggregates
  std::uint64_t seed = 0;
  std::string status;  // ok | budget | infeasible | error (aggregates: ok | mixed)
  double cpu_seconds = 0;
  double peak_mem_kb = 0;
  double fd_nodes = 0;
  double fd_edges = 0;
};

/// Runs every (algo, varied value) configuration for `trials` seeded trials
/// and appends a mean and a range (max minus min) row per configuration.
/// Budget overruns become row flags, not failures.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// CSV with the fixed header
/// algo,m,n,k,trial,seed,status,cpu_seconds,peak_mem_kb,fd_nodes,fd_edges.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace flowdiag
