#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "flowdiag/datagen.hpp"
#include "flowdiag/exact.hpp"
#include "flowdiag/frontier.hpp"
#include "flowdiag/io.hpp"
#include "flowdiag/validate.hpp"
#include "testutil.hpp"

using namespace flowdiag;

TEST_CASE("greedy advance consumes every sequence as far as the tables allow") {
  const auto inst = testutil::char_instance({"aab", "abb"}, "ab");
  const auto rt = build_reach_tables(inst);
  CHECK(greedy_advance({0, 0}, 0, rt) == GridVertex{2, 1});
  CHECK(greedy_advance({0, 0}, 1, rt) == GridVertex{0, 0});
  CHECK(greedy_advance({2, 1}, 1, rt) == GridVertex{3, 3});
}

TEST_CASE("frontier layers are fresh antichains within the candidate budget") {
  const auto inst = make_instance(generate_dataset(3, 6, 5, 7));
  const auto rt = build_reach_tables(inst);
  long cells = 1;
  for (const auto& s : inst.sequences) cells *= s.length() + 1;
  const auto budget = static_cast<std::uint64_t>(inst.num_criteria()) *
                      static_cast<std::uint64_t>(cells);

  Frontier f = initial_frontier(inst);
  REQUIRE(f.entries.size() == 1);
  CHECK(f.entries[0].vertex == source_vertex(inst));
  const GridVertex corner = corner_vertex(inst);

  std::set<GridVertex> seen{f.entries[0].vertex};
  bool reached = false;
  for (int step = 0; step < 64 && !reached; ++step) {
    f = next_frontier(inst, rt, f);
    REQUIRE_FALSE(f.entries.empty());
    CHECK(f.candidates_generated <= budget);
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
      if (i > 0) CHECK(lex_less(f.entries[i - 1].vertex, f.entries[i].vertex));
      for (std::size_t j = i + 1; j < f.entries.size(); ++j) {
        CHECK_FALSE(dominates(f.entries[i].vertex, f.entries[j].vertex));
        CHECK_FALSE(dominates(f.entries[j].vertex, f.entries[i].vertex));
      }
      CHECK(seen.insert(f.entries[i].vertex).second);
      if (f.entries[i].vertex == corner) reached = true;
    }
  }
  CHECK(reached);
}

TEST_CASE("the frontier optimum matches exhaustive search") {
  testutil::Rng rng(0xf00du);
  for (int iter = 0; iter < 30; ++iter) {
    const auto inst = testutil::random_label_instance(rng, 1 + rng.below(3), 5, 1 + rng.below(3));
    const auto ex = solve_exact(inst);
    const auto fr = solve_frontier_independent(inst);
    REQUIRE(ex.solved());
    REQUIRE(fr.solved());
    CHECK(fd_size(fr.solution->diagram) == fd_size(ex.solution->diagram));
    CHECK(validate(inst, fr.solution->diagram, fr.solution->certificates).valid);
  }
}

TEST_CASE("dense marking and pairwise filtering give identical solutions") {
  for (const std::uint64_t seed : {1u, 7u, 23u}) {
    const auto inst = make_instance(generate_dataset(3, 8, 6, seed));
    const auto pairwise = solve_frontier_independent(inst);
    FrontierOptions opts;
    opts.dense_marking = true;
    const auto dense = solve_frontier_independent(inst, opts);
    REQUIRE(pairwise.solved());
    REQUIRE(dense.solved());
    CHECK(pairwise.solution->stats.steps == dense.solution->stats.steps);
    CHECK(diagram_to_json(inst, pairwise.solution->diagram, pairwise.solution->certificates) ==
          diagram_to_json(inst, dense.solution->diagram, dense.solution->certificates));
  }
}

TEST_CASE("dense marking respects its cell cap") {
  const auto inst = make_instance(generate_dataset(3, 8, 6, 1));
  FrontierOptions opts;
  opts.dense_marking = true;
  opts.dense_grid_cell_cap = 10;
  const auto res = solve_frontier_independent(inst, opts);
  CHECK(res.status == SolveStatus::cap_exceeded);
  CHECK(res.detail == "grid has more cells than the dense marking cap allows");
}

namespace {

// Dependent test criterion: all advancing segments must have equal length.
Criterion equal_advance_criterion() {
  Criterion c;
  c.id = "eq";
  c.name = "equal advance";
  c.flags = {false, false, false};
  c.oracle = [](const std::vector<StateSequence>&, std::span<const SegmentRef> segs) {
    for (const auto& s : segs)
      if (s.length() != segs.front().length()) return false;
    return true;
  };
  return c;
}

}  // namespace

TEST_CASE("the dependent sweep returns pareto maximal advances") {
  Instance inst;
  inst.sequences.push_back(testutil::char_sequence("u", "xxx"));
  inst.sequences.push_back(testutil::char_sequence("v", "xxx"));
  inst.criteria.push_back(equal_advance_criterion());

  CHECK(maximal_reachable_dependent(inst, {0, 0}, 0) == std::vector<GridVertex>{{3, 3}});
  CHECK(maximal_reachable_dependent(inst, {3, 3}, 0).empty());
  CHECK(maximal_reachable_dependent(inst, {1, 3}, 0) == std::vector<GridVertex>{{3, 3}});
}

TEST_CASE("the dependent sweep solver matches exhaustive search") {
  testutil::Rng rng(0x9a7bu);
  for (int iter = 0; iter < 12; ++iter) {
    auto inst = testutil::random_label_instance(rng, 1 + rng.below(2), 4, 2);
    inst.criteria.push_back(testutil::length_cap_criterion("cap", 1 + rng.below(4)));
    const auto ex = solve_exact(inst);
    const auto fr = solve_frontier_dependent(inst);
    REQUIRE(ex.solved());
    REQUIRE(fr.solved());
    CHECK(fd_size(fr.solution->diagram) == fd_size(ex.solution->diagram));
    CHECK(validate(inst, fr.solution->diagram, fr.solution->certificates).valid);
  }
}

TEST_CASE("the frontier solvers enforce their flag contracts") {
  auto dep = testutil::char_instance({"ab"}, "ab");
  dep.criteria.push_back(testutil::length_cap_criterion("cap", 3));
  CHECK(testutil::thrown_what([&] { solve_frontier_independent(dep); }) ==
        "frontier antichain search needs monotone decreasing, independent criteria");

  Instance exact_table;
  exact_table.sequences.push_back(testutil::char_sequence("u", "xx"));
  exact_table.criteria.push_back(table_criterion("E", "e", false, {{"u", {{0, 2}}}}));
  CHECK(testutil::thrown_what([&] { solve_frontier_dependent(exact_table); }) ==
        "frontier sweep search needs monotone decreasing criteria");
}

TEST_CASE("an unsatisfiable dependent criterion empties the frontier") {
  Instance inst;
  inst.sequences.push_back(testutil::char_sequence("tau", "xy"));
  Criterion shy;
  shy.id = "shy";
  shy.name = "never fulfilled";
  shy.flags = {true, false, false};
  shy.oracle = [](const std::vector<StateSequence>&, std::span<const SegmentRef>) {
    return false;
  };
  inst.criteria.push_back(shy);
  const auto res = solve_frontier_dependent(inst);
  CHECK(res.status == SolveStatus::infeasible);
  CHECK(res.detail.rfind("frontier emptied", 0) == 0);
}
