#pragma once

#include <cstdint>
#include <vector>

#include "flowdiag/grid.hpp"
#include "flowdiag/reach.hpp"
#include "flowdiag/solve.hpp"
#include "flowdiag/types.hpp"

namespace flowdiag {

/// Coordinate-wise maximal one-step advance of v under criterion `crit`;
/// returns v itself when no sequence can advance.
GridVertex greedy_advance(const GridVertex& v, int crit, const ReachTables& rt);

struct FrontierEntry {
  GridVertex vertex;
  int criterion = -1;  // edge label that produced this vertex (-1 at the source)
  int parent = -1;     // index into the previous frontier's entries
};

/// One antichain layer of the frontier search, sorted lexicographically.
struct Frontier {
  int step = 0;
  std::vector<FrontierEntry> entries;
  std::uint64_t candidates_generated = 0;
};

Frontier initial_frontier(const Instance& inst);

/// One expansion: greedy advances of every (entry, criterion) pair,
/// deduplicated, then reduced to the maximal antichain.  Duplicate vertices
/// keep the smallest criterion and then the lexicographically smallest parent.
Frontier next_frontier(const Instance& inst, const ReachTables& rt, const Frontier& current);

struct FrontierOptions {
  SearchLimits limits;
  /// Use a persistent marking grid over all (n_i+1) cells instead of pairwise
  /// antichain filtering.  Requires the cell count to fit the cap below.
  bool dense_marking = false;
  long dense_grid_cell_cap = 50'000'000;
};

/// Frontier search for instances whose criteria are all monotone decreasing
/// and independent; minimal node count.
SolveResult solve_frontier_independent(const Instance& inst, const FrontierOptions& options = {});

/// Pareto-maximal vertices reachable from v by one edge labelled `crit`
/// (joint, possibly dependent criterion).  Sweeps all advance combinations of
/// the first m-1 sequences and maximizes the last by a descending scan whose
/// first hit is maximal for contract-honouring monotone oracles.
std::vector<GridVertex> maximal_reachable_dependent(const Instance& inst, const GridVertex& v,
                                                    int crit);

/// Frontier search for monotone decreasing criteria, dependent allowed;
/// minimal node count.
SolveResult solve_frontier_dependent(const Instance& inst, const FrontierOptions& options = {});

}  // namespace flowdiag
