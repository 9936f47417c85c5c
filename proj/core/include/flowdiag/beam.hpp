#pragma once

#include <cstdint>

#include "flowdiag/grid.hpp"
#include "flowdiag/solve.hpp"
#include "flowdiag/types.hpp"

namespace flowdiag {

/// Number of sequences advanced by the step v -> v2.
int score_sequences(const GridVertex& v, const GridVertex& v2);

/// Total states consumed by the step v -> v2.
long score_timesteps(const GridVertex& v, const GridVertex& v2);

enum class BeamStrategy { sequences, timesteps };

struct BeamOptions {
  BeamStrategy strategy = BeamStrategy::sequences;
  int width = 1;  // beam width q
  SearchLimits limits;
  /// Expansion guard for widths > 1; total generated candidates beyond this
  /// end the search with budget_exceeded.
  std::uint64_t max_candidates = 50'000'000;
};

/// Greedy beam search over the frontier candidates: per step the candidates
/// are deduplicated, dominance-filtered, then truncated to the `width` best
/// by the chosen score (the other score breaks ties, then the smallest
/// criterion, then the lexicographically smallest vertex).  Sound but not
/// optimal.  Requires monotone decreasing, independent criteria.
SolveResult solve_beam(const Instance& inst, const BeamOptions& options = {});

}  // namespace flowdiag
