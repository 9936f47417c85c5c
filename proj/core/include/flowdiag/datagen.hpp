#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "flowdiag/dataset.hpp"

namespace flowdiag {

/// Markov chain on a ring of k >= 5 nodes: stay with probability 0.7, move to
/// each adjacent node with 0.1, to each node two away with 0.05.  Sampling is
/// reproducible across platforms: mt19937_64 plus modulo draws over the exact
/// integer weights (14, 2, 2, 1, 1 over a denominator of 20).
class RingChain {
 public:
  RingChain(int k, std::uint64_t seed);

  int num_nodes() const { return k_; }

  /// Exact transition weights from `node` as (target, numerator) pairs over a
  /// common denominator of 20; numerators always sum to 20.
  std::vector<std::pair<int, int>> row_numerators(int node) const;

  double probability(int from, int to) const;

  /// Uniformly random start node.
  int initial();

  /// One transition from `from`.
  int step(int from);

 private:
  int k_;
  std::mt19937_64 rng_;
};

/// m sequences of n states over a k-node ring chain; state labels are the
/// visited node tags c0..c{k-1}, criteria are the k matching label criteria.
/// Identical parameters and seed give byte-identical serialized datasets.
Dataset generate_dataset(int m, int n, int k, std::uint64_t seed);

/// Shortest-common-supersequence reduction: one sequence per string, one
/// label criterion per distinct character.  Minimal diagram size is the SCS
/// length plus the two terminals.
Dataset scs_instance(const std::vector<std::string>& strings);

/// Exact SCS length by dynamic programming over the prefix product space.
/// Caps: at most 3 strings of length at most 10 each.
int scs_oracle(const std::vector<std::string>& strings);

/// Set-cover reduction: one two-state sequence per element; each state of
/// element e carries one label per covering set, and each set becomes a label
/// criterion.  Minimal diagram size is the minimal cover plus two terminals.
/// `sets` holds 0-based element indices.
Dataset set_cover_instance(int num_elements, const std::vector<std::vector<int>>& sets);

/// Minimal cover cardinality by enumeration in increasing cardinality.
/// Caps: at most 20 sets.  Throws when the union misses an element.
int set_cover_oracle(int num_elements, const std::vector<std::vector<int>>& sets);

}  // namespace flowdiag
