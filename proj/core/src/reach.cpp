#include "flowdiag/reach.hpp"

#include <stdexcept>

namespace flowdiag {

namespace {

/// One reach row for a monotone, independent criterion.
std::vector<int> reach_row(const Instance& inst, int crit, int seq) {
  const int n = inst.length(seq);
  std::vector<int> row(static_cast<std::size_t>(n) + 1);
  const Criterion& c = inst.criteria[static_cast<std::size_t>(crit)];
  if (c.flags.fixed) {
    // Per-state verdicts, then maximal runs of fulfilling states.
    std::vector<char> ok(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      ok[static_cast<std::size_t>(a)] = fulfils_single(inst, crit, {seq, a, a + 1});
    row[static_cast<std::size_t>(n)] = n;
    for (int a = n - 1; a >= 0; --a) {
      if (!ok[static_cast<std::size_t>(a)])
        row[static_cast<std::size_t>(a)] = a;
      else if (a + 1 < n && ok[static_cast<std::size_t>(a) + 1])
        row[static_cast<std::size_t>(a)] = row[static_cast<std::size_t>(a) + 1];
      else
        row[static_cast<std::size_t>(a)] = a + 1;
    }
    return row;
  }
  // Two-pointer sweep; monotonicity keeps the right end from moving back.
  int b = 0;
  for (int a = 0; a <= n; ++a) {
    if (b < a) b = a;
    while (b < n && fulfils_single(inst, crit, {seq, a, b + 1})) ++b;
    row[static_cast<std::size_t>(a)] = b;
  }
  return row;
}

}  // namespace

int ReachTables::reach(int criterion, int seq, int a) const {
  return row(criterion, seq)[static_cast<std::size_t>(a)];
}

const std::vector<int>& ReachTables::row(int criterion, int seq) const {
  return tables_[static_cast<std::size_t>(criterion)][static_cast<std::size_t>(seq)];
}

ReachTables build_reach_tables(const Instance& inst) {
  if (!all_monotone_independent(inst))
    throw std::invalid_argument(
        "build_reach_tables: every criterion must be monotone decreasing and independent");
  ReachTables rt;
  rt.tables_.resize(static_cast<std::size_t>(inst.num_criteria()));
  for (int c = 0; c < inst.num_criteria(); ++c) {
    auto& per_seq = rt.tables_[static_cast<std::size_t>(c)];
    per_seq.resize(static_cast<std::size_t>(inst.num_sequences()));
    for (int i = 0; i < inst.num_sequences(); ++i)
      per_seq[static_cast<std::size_t>(i)] = reach_row(inst, c, i);
  }
  return rt;
}

std::optional<std::pair<int, int>> find_uncoverable_state(const Instance& inst) {
  for (const auto& c : inst.criteria)
    if (!c.flags.independent) return std::nullopt;  // joint sets might cover anything

  // Work cap for the quadratic scan over non-monotone criteria.
  long quad_work = 0;
  for (const auto& c : inst.criteria) {
    if (c.flags.monotone_decreasing) continue;
    for (int i = 0; i < inst.num_sequences(); ++i) {
      const long n = inst.length(i);
      quad_work += n * n;
    }
  }
  if (quad_work > 50'000'000) return std::nullopt;

  for (int i = 0; i < inst.num_sequences(); ++i) {
    const int n = inst.length(i);
    std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);  // 1-based states
    for (int c = 0; c < inst.num_criteria(); ++c) {
      if (inst.criteria[static_cast<std::size_t>(c)].flags.monotone_decreasing) {
        const std::vector<int> row = reach_row(inst, c, i);
        for (int j = 1; j <= n; ++j)
          if (row[static_cast<std::size_t>(j) - 1] >= j) covered[static_cast<std::size_t>(j)] = 1;
      } else {
        // The union of fulfilled segments starting after a is [a+1, max fulfilled b].
        for (int a = 0; a < n; ++a) {
          int max_b = a;
          for (int b = a + 1; b <= n; ++b)
            if (fulfils_single(inst, c, {i, a, b})) max_b = b;
          for (int j = a + 1; j <= max_b; ++j) covered[static_cast<std::size_t>(j)] = 1;
        }
      }
    }
    for (int j = 1; j <= n; ++j)
      if (!covered[static_cast<std::size_t>(j)]) return std::make_pair(i, j);
  }
  return std::nullopt;
}

}  // namespace flowdiag
