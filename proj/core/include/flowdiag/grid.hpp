#pragma once

#include <cstddef>
#include <vector>

#include "flowdiag/types.hpp"

namespace flowdiag {

/// A prefix-graph vertex: per-sequence count of already consumed states.
using GridVertex = std::vector<int>;

/// Strict coordinate-wise dominance: u >= v everywhere and u != v.
/// Throws std::invalid_argument on arity mismatch.
bool dominates(const GridVertex& u, const GridVertex& v);

/// The antichain of members not dominated by any other member.
/// Duplicates are collapsed; the result is sorted lexicographically.
std::vector<GridVertex> maximal_set(const std::vector<GridVertex>& vertices);

bool lex_less(const GridVertex& a, const GridVertex& b);

GridVertex source_vertex(const Instance& inst);

/// (n_1, ..., n_m): every sequence fully consumed.
GridVertex corner_vertex(const Instance& inst);

struct GridVertexHash {
  std::size_t operator()(const GridVertex& v) const;
};

}  // namespace flowdiag
