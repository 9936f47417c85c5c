#pragma once

#include "flowdiag/grid.hpp"
#include "flowdiag/solve.hpp"
#include "flowdiag/types.hpp"

namespace flowdiag {

/// True iff v -> v2 is a prefix-graph edge labelled with criterion `crit`:
/// every advancing sequence's segment is non-empty and the advancing segments
/// jointly fulfil the criterion.  Requires v2 >= v coordinate-wise, v2 != v.
bool edge_label_valid(const Instance& inst, const GridVertex& v, const GridVertex& v2,
                      int crit);

struct ExactOptions {
  SearchLimits limits;
  /// When every criterion is monotone decreasing and independent, generate a
  /// single per-sequence-maximal successor per criterion instead of
  /// enumerating all coordinate-wise-greater vertices.  Has no effect (the
  /// full enumeration runs) whenever any criterion lacks those flags.
  bool monotone_pruning = true;
};

/// Breadth-first search over the implicit prefix graph; minimal node count.
SolveResult solve_exact(const Instance& inst, const ExactOptions& options = {});

struct ReferenceOptions {
  long max_vertices = 1'000'000;
  long max_edge_candidates = 20'000'000;
  SearchLimits limits;
};

/// Debugging reference: materializes every prefix-graph vertex and edge and
/// runs a textbook shortest-path search.  Exponentially sized; refuses
/// instances beyond the caps (status cap_exceeded).
SolveResult solve_reference(const Instance& inst, const ReferenceOptions& options = {});

}  // namespace flowdiag
