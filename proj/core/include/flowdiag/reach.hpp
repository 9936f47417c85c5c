#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flowdiag/types.hpp"

namespace flowdiag {

/// Per (criterion, sequence) advance tables: reach(c, i, a) is the largest
/// b >= a such that states a+1..b fulfil criterion c (a itself when no
/// non-empty extension does).  Rows are non-decreasing in a.
class ReachTables {
 public:
  int reach(int criterion, int seq, int a) const;
  const std::vector<int>& row(int criterion, int seq) const;
  int num_criteria() const { return static_cast<int>(tables_.size()); }
  int num_sequences() const {
    return tables_.empty() ? 0 : static_cast<int>(tables_.front().size());
  }

 private:
  friend ReachTables build_reach_tables(const Instance&);
  std::vector<std::vector<std::vector<int>>> tables_;  // [criterion][seq][a]
};

/// Builds all tables with one forward sweep per (sequence, criterion) pair:
/// a run scan over per-state verdicts for fixed criteria, a two-pointer sweep
/// otherwise; at most O(n) oracle evaluations per pair.  Requires every
/// criterion to be monotone decreasing and independent.
ReachTables build_reach_tables(const Instance& inst);

/// Necessary feasibility check: a state contained in no fulfilled segment can
/// never be covered.  Returns such a (sequence, 1-based state) witness, or
/// nullopt when none is found.  Only independent criteria can prove a state
/// uncoverable, so with any dependent criterion present (or when the scan work
/// cap is hit for non-monotone criteria) the check reports nullopt (unknown).
std::optional<std::pair<int, int>> find_uncoverable_state(const Instance& inst);

}  // namespace flowdiag
