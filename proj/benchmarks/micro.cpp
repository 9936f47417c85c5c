// Microbenchmarks for the hot paths: reach table construction, antichain
// filtering, and the three solver families at representative sizes.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "flowdiag/beam.hpp"
#include "flowdiag/datagen.hpp"
#include "flowdiag/exact.hpp"
#include "flowdiag/frontier.hpp"
#include "flowdiag/reach.hpp"

using namespace flowdiag;

namespace {

void BM_reach_tables(benchmark::State& state) {
  const auto inst = make_instance(generate_dataset(8, static_cast<int>(state.range(0)), 16, 3));
  for (auto _ : state) benchmark::DoNotOptimize(build_reach_tables(inst));
  state.SetItemsProcessed(state.iterations() * inst.total_length());
}
BENCHMARK(BM_reach_tables)->Arg(64)->Arg(256)->Arg(1024);

void BM_maximal_set(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<GridVertex> vertices(static_cast<std::size_t>(state.range(0)));
  for (auto& v : vertices) {
    v.resize(8);
    for (auto& x : v) x = static_cast<int>(rng() % 32);
  }
  for (auto _ : state) benchmark::DoNotOptimize(maximal_set(vertices));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_maximal_set)->Arg(64)->Arg(512)->Arg(4096);

void BM_solve_exact(benchmark::State& state) {
  const auto inst = make_instance(generate_dataset(4, 4, 10, 11));
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(inst));
}
BENCHMARK(BM_solve_exact);

void BM_solve_frontier(benchmark::State& state) {
  const auto inst = make_instance(generate_dataset(8, 32, 10, 11));
  for (auto _ : state) benchmark::DoNotOptimize(solve_frontier_independent(inst));
}
BENCHMARK(BM_solve_frontier);

void BM_solve_beam_step(benchmark::State& state) {
  const auto inst = make_instance(generate_dataset(16, 128, 16, 11));
  BeamOptions opts;
  opts.strategy = BeamStrategy::timesteps;
  for (auto _ : state) benchmark::DoNotOptimize(solve_beam(inst, opts));
}
BENCHMARK(BM_solve_beam_step);

}  // namespace

BENCHMARK_MAIN();
