#include <doctest.h>

#include <string>
#include <vector>

#include "flowdiag/beam.hpp"
#include "flowdiag/datagen.hpp"
#include "flowdiag/exact.hpp"
#include "flowdiag/io.hpp"
#include "flowdiag/validate.hpp"
#include "testutil.hpp"

using namespace flowdiag;

TEST_CASE("step scores count advanced sequences and consumed states") {
  CHECK(score_sequences({0, 0, 0}, {2, 0, 1}) == 2);
  CHECK(score_timesteps({0, 0, 0}, {2, 0, 1}) == 3);
  CHECK(score_sequences({1, 2}, {1, 2}) == 0);
  CHECK(score_timesteps({1, 2}, {1, 2}) == 0);
}

TEST_CASE("both strategies produce valid diagrams at least as large as optimal") {
  for (const std::uint64_t seed : {3u, 11u, 19u}) {
    const auto inst = make_instance(generate_dataset(3, 6, 5, seed));
    const auto ex = solve_exact(inst);
    REQUIRE(ex.solved());
    for (const auto strategy : {BeamStrategy::sequences, BeamStrategy::timesteps}) {
      BeamOptions opts;
      opts.strategy = strategy;
      const auto res = solve_beam(inst, opts);
      REQUIRE(res.solved());
      CHECK(validate(inst, res.solution->diagram, res.solution->certificates).valid);
      CHECK(fd_size(res.solution->diagram) >= fd_size(ex.solution->diagram));
    }
  }
}

TEST_CASE("an effectively unbounded beam recovers the optimum") {
  testutil::Rng rng(0xbea3u);
  for (int iter = 0; iter < 20; ++iter) {
    const auto inst = testutil::random_label_instance(rng, 1 + rng.below(3), 4, 1 + rng.below(3));
    const auto ex = solve_exact(inst);
    REQUIRE(ex.solved());
    for (const auto strategy : {BeamStrategy::sequences, BeamStrategy::timesteps}) {
      BeamOptions opts;
      opts.strategy = strategy;
      opts.width = 1 << 20;
      const auto res = solve_beam(inst, opts);
      REQUIRE(res.solved());
      CHECK(fd_size(res.solution->diagram) == fd_size(ex.solution->diagram));
    }
  }
}

TEST_CASE("ties between goal candidates break deterministically") {
  // Width 2 keeps both the a-first and c-first openings alive; at the third
  // step both survivors generate the corner and the smaller edge criterion
  // must win, fixing the path c -> a -> b.
  const auto inst = testutil::char_instance({"abbbbb", "c"}, "abc");
  BeamOptions opts;
  opts.strategy = BeamStrategy::timesteps;
  opts.width = 2;
  const auto res = solve_beam(inst, opts);
  REQUIRE(res.solved());
  const auto& fd = res.solution->diagram;
  CHECK(fd_size(fd) == 5);
  REQUIRE(fd.nodes.size() == 5);
  CHECK(fd.nodes[1].criterion == 2);
  CHECK(fd.nodes[2].criterion == 0);
  CHECK(fd.nodes[3].criterion == 1);
  CHECK(validate(inst, fd, res.solution->certificates).valid);
}

TEST_CASE("beam options are checked up front") {
  const auto inst = testutil::char_instance({"ab"}, "ab");
  BeamOptions zero;
  zero.width = 0;
  CHECK(testutil::thrown_what([&] { solve_beam(inst, zero); }) == "beam width must be at least 1");

  auto dep = inst;
  dep.criteria.push_back(testutil::length_cap_criterion("cap", 3));
  CHECK(testutil::thrown_what([&] { solve_beam(dep); }) ==
        "beam search needs monotone decreasing, independent criteria");
}

TEST_CASE("the candidate guard ends over-wide searches") {
  const auto inst = make_instance(generate_dataset(3, 6, 5, 7));
  BeamOptions opts;
  opts.width = 2;
  opts.max_candidates = 1;
  const auto res = solve_beam(inst, opts);
  CHECK(res.status == SolveStatus::budget_exceeded);
  CHECK_FALSE(res.detail.empty());
}

TEST_CASE("beam search reports uncoverable states like the exact solver") {
  const auto inst = testutil::char_instance({"axb"}, "ab");
  const auto res = solve_beam(inst);
  CHECK(res.status == SolveStatus::infeasible);
  CHECK(res.detail == "state 2 of sequence s0 lies in no fulfilled segment");
}

TEST_CASE("beam search is reproducible") {
  const auto inst = make_instance(generate_dataset(4, 10, 6, 21));
  BeamOptions opts;
  opts.strategy = BeamStrategy::timesteps;
  opts.width = 3;
  const auto a = solve_beam(inst, opts);
  const auto b = solve_beam(inst, opts);
  REQUIRE(a.solved());
  REQUIRE(b.solved());
  CHECK(diagram_to_json(inst, a.solution->diagram, a.solution->certificates) ==
        diagram_to_json(inst, b.solution->diagram, b.solution->certificates));
}
