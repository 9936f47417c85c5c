#include "flowdiag/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "flowdiag/beam.hpp"
#include "flowdiag/datagen.hpp"
#include "flowdiag/exact.hpp"
#include "flowdiag/frontier.hpp"

namespace flowdiag {

namespace {

SolveResult run_algo(const std::string& algo, const Instance& inst, const BenchConfig& config) {
  if (algo == "exact") {
    ExactOptions o;
    o.limits = config.limits;
    return solve_exact(inst, o);
  }
  if (algo == "frontier") {
    FrontierOptions o;
    o.limits = config.limits;
    return solve_frontier_independent(inst, o);
  }
  if (algo == "beam-seq" || algo == "beam-step") {
    BeamOptions o;
    o.limits = config.limits;
    o.width = config.beam_width;
    o.strategy = algo == "beam-seq" ? BeamStrategy::sequences : BeamStrategy::timesteps;
    return solve_beam(inst, o);
  }
  throw std::invalid_argument("unknown algorithm: " + algo);
}

std::string status_tag(SolveStatus s) {
  switch (s) {
    case SolveStatus::solved: return "ok";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::budget_exceeded: return "budget";
    default: return "error";
  }
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.vary != "m" && config.vary != "n" && config.vary != "k")
    throw std::invalid_argument("vary must be one of m, n, k");
  if (config.trials < 1) throw std::invalid_argument("need at least one trial");

  std::vector<BenchRow> rows;
  for (const std::string& algo : config.algos) {
    for (int value : config.values) {
      int m = config.m, n = config.n, k = config.k;
      if (config.vary == "m")
        m = value;
      else if (config.vary == "n")
        n = value;
      else
        k = value;

      std::vector<BenchRow> raw;
      for (int trial = 1; trial <= config.trials; ++trial) {
        const std::uint64_t seed = config.seed * 1000003ULL +
                                   static_cast<std::uint64_t>(value) * 1009ULL +
                                   static_cast<std::uint64_t>(trial);
        const Instance inst = make_instance(generate_dataset(m, n, k, seed));
        const double cpu0 = process_cpu_seconds();
        const SolveResult res = run_algo(algo, inst, config);
        const double cpu1 = process_cpu_seconds();

        BenchRow row;
        row.algo = algo;
        row.m = m;
        row.n = n;
        row.k = k;
        row.trial = std::to_string(trial);
        row.seed = seed;
        row.status = status_tag(res.status);
        row.cpu_seconds = cpu1 - cpu0;
        row.peak_mem_kb = static_cast<double>(process_peak_rss_kb());
        if (res.solution) {
          row.fd_nodes = static_cast<double>(res.solution->diagram.nodes.size());
          row.fd_edges = static_cast<double>(res.solution->diagram.edges.size());
        }
        raw.push_back(std::move(row));
      }

      BenchRow mean = raw.front();
      mean.trial = "mean";
      mean.seed = 0;
      BenchRow range = raw.front();
      range.trial = "range";
      range.seed = 0;
      const auto aggregate = [&raw](auto getter, double& mean_out, double& range_out) {
        double sum = 0, lo = getter(raw.front()), hi = lo;
        for (const BenchRow& r : raw) {
          const double x = getter(r);
          sum += x;
          lo = std::min(lo, x);
          hi = std::max(hi, x);
        }
        mean_out = sum / static_cast<double>(raw.size());
        range_out = hi - lo;
      };
      aggregate([](const BenchRow& r) { return r.cpu_seconds; }, mean.cpu_seconds,
                range.cpu_seconds);
      aggregate([](const BenchRow& r) { return r.peak_mem_kb; }, mean.peak_mem_kb,
                range.peak_mem_kb);
      aggregate([](const BenchRow& r) { return r.fd_nodes; }, mean.fd_nodes, range.fd_nodes);
      aggregate([](const BenchRow& r) { return r.fd_edges; }, mean.fd_edges, range.fd_edges);
      bool uniform = true;
      for (const BenchRow& r : raw) uniform = uniform && r.status == raw.front().status;
      mean.status = range.status = uniform ? raw.front().status : "mixed";

      rows.insert(rows.end(), raw.begin(), raw.end());
      rows.push_back(std::move(mean));
      rows.push_back(std::move(range));
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "algo,m,n,k,trial,seed,status,cpu_seconds,peak_mem_kb,fd_nodes,fd_edges\n";
  for (const BenchRow& r : rows) {
    out << r.algo << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.trial << ',' << r.seed
        << ',' << r.status << ',' << format_double(r.cpu_seconds) << ','
        << format_double(r.peak_mem_kb) << ',' << format_double(r.fd_nodes) << ','
        << format_double(r.fd_edges) << '\n';
  }
  return out.str();
}

}  // namespace flowdiag
