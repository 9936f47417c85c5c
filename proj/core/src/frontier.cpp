#include "flowdiag/frontier.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flowdiag/exact.hpp"
#include "search_util.hpp"

namespace flowdiag {

using detail::budget_exhausted;
using detail::infeasible_from_witness;
using detail::require_searchable;

namespace {

bool candidate_less(const FrontierEntry& a, const FrontierEntry& b) {
  if (a.vertex != b.vertex) return lex_less(a.vertex, b.vertex);
  if (a.criterion != b.criterion) return a.criterion < b.criterion;
  return a.parent < b.parent;
}

/// Sorted candidates -> unique vertices (first wins) -> maximal antichain.
std::vector<FrontierEntry> finalize_pairwise(std::vector<FrontierEntry>&& candidates) {
  std::vector<FrontierEntry> unique;
  for (auto& c : candidates)
    if (unique.empty() || unique.back().vertex != c.vertex) unique.push_back(std::move(c));
  std::vector<FrontierEntry> out;
  std::vector<char> keep(unique.size(), 1);
  for (std::size_t i = 0; i < unique.size(); ++i)
    for (std::size_t j = 0; j < unique.size() && keep[i]; ++j)
      if (j != i && dominates(unique[j].vertex, unique[i].vertex)) keep[i] = 0;
  for (std::size_t i = 0; i < unique.size(); ++i)
    if (keep[i]) out.push_back(std::move(unique[i]));
  return out;
}

/// Tri-state cell grid reused across steps so each cell's strict lower cone is
/// flooded at most once over the whole search.  0 untouched, 1 live candidate,
/// 2 dominated or consumed.  New candidates never land on stale marks: every
/// candidate strictly dominates its parent, so it cannot fall under (or onto)
/// any earlier frontier's entries or their dominated cones.
class DenseGrid {
 public:
  explicit DenseGrid(const Instance& inst) {
    const int m = inst.num_sequences();
    dims_.resize(static_cast<std::size_t>(m));
    stride_.assign(static_cast<std::size_t>(m), 1);
    for (int i = 0; i < m; ++i) dims_[static_cast<std::size_t>(i)] = inst.length(i) + 1;
    for (int i = m - 2; i >= 0; --i)
      stride_[static_cast<std::size_t>(i)] =
          stride_[static_cast<std::size_t>(i + 1)] * dims_[static_cast<std::size_t>(i + 1)];
    state_.assign(static_cast<std::size_t>(stride_[0] * dims_[0]), 0);
  }

  bool insert(const GridVertex& v) {
    auto& cell = state_[static_cast<std::size_t>(index(v))];
    if (cell != 0) return false;
    cell = 1;
    return true;
  }

  void flood(const GridVertex& v) {
    stack_.clear();
    push_children(index(v), v);
    GridVertex digits(v.size());
    while (!stack_.empty()) {
      const long u = stack_.back();
      stack_.pop_back();
      long rest = u;
      for (std::size_t i = 0; i < digits.size(); ++i) {
        digits[i] = static_cast<int>(rest / stride_[i]);
        rest %= stride_[i];
      }
      push_children(u, digits);
    }
  }

  bool alive(const GridVertex& v) const { return state_[static_cast<std::size_t>(index(v))] == 1; }
  void consume(const GridVertex& v) { state_[static_cast<std::size_t>(index(v))] = 2; }

 private:
  long index(const GridVertex& v) const {
    long idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) idx += stride_[i] * v[i];
    return idx;
  }

  void push_children(long idx, const GridVertex& digits) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] == 0) continue;
      const long child = idx - stride_[i];
      auto& cell = state_[static_cast<std::size_t>(child)];
      if (cell == 2) continue;  // cone below already flooded (or queued)
      cell = 2;
      stack_.push_back(child);
    }
  }

  std::vector<int> dims_;
  std::vector<long> stride_;
  std::vector<unsigned char> state_;
  std::vector<long> stack_;
};

std::vector<PathStep> reconstruct(const std::vector<Frontier>& history) {
  std::vector<PathStep> steps;
  int idx = static_cast<int>(history.back().entries.size()) - 1;
  for (std::size_t j = history.size() - 1; j >= 1; --j) {
    const FrontierEntry& e = history[j].entries[static_cast<std::size_t>(idx)];
    steps.push_back(
        {e.criterion, history[j - 1].entries[static_cast<std::size_t>(e.parent)].vertex, e.vertex});
    idx = e.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

/// Shared frontier loop.  `generate(current, out, guard)` appends candidate
/// entries (parent = index into current.entries) and returns its oracle calls.
template <class Gen>
SolveResult run_frontier(const Instance& inst, const FrontierOptions& options, Gen&& generate) {
  BudgetGuard guard(options.limits);
  SolveStats stats;
  const GridVertex corner = corner_vertex(inst);

  std::optional<DenseGrid> grid;
  if (options.dense_marking) {
    long double cells = 1;
    for (int i = 0; i < inst.num_sequences(); ++i) cells *= inst.length(i) + 1;
    if (cells > static_cast<long double>(options.dense_grid_cell_cap)) {
      SolveResult r;
      r.status = SolveStatus::cap_exceeded;
      r.detail = "grid has more cells than the dense marking cap allows";
      return r;
    }
    grid.emplace(inst);
  }

  std::vector<Frontier> history{initial_frontier(inst)};
  const long step_cap = inst.total_length();
  for (;;) {
    const Frontier& current = history.back();
    if (current.entries.back().vertex == corner) {  // corner is lex-maximal
      const auto steps = reconstruct(history);
      Solution sol = assemble_solution(inst, steps);
      sol.stats.cpu_seconds = guard.elapsed();
      sol.stats.expanded = stats.expanded;
      sol.stats.candidates = stats.candidates;
      sol.stats.oracle_calls = stats.oracle_calls;
      sol.stats.steps = static_cast<int>(steps.size());
      SolveResult r;
      r.solution = std::move(sol);
      return r;
    }
    if (static_cast<long>(history.size()) > step_cap)
      throw std::logic_error("frontier search exceeded the step bound");

    std::vector<FrontierEntry> candidates;
    stats.oracle_calls += generate(current, candidates, guard);
    stats.expanded += current.entries.size();
    stats.candidates += candidates.size();
    if (guard.exceeded()) return budget_exhausted(guard, stats.expanded);

    std::sort(candidates.begin(), candidates.end(), candidate_less);
    Frontier next;
    next.step = current.step + 1;
    next.candidates_generated = candidates.size();
    if (grid) {
      std::vector<FrontierEntry> kept;
      for (auto& c : candidates)
        if (grid->insert(c.vertex)) kept.push_back(std::move(c));
      for (const auto& c : kept) grid->flood(c.vertex);
      for (auto& c : kept)
        if (grid->alive(c.vertex)) {
          grid->consume(c.vertex);
          next.entries.push_back(std::move(c));
        }
    } else {
      next.entries = finalize_pairwise(std::move(candidates));
    }
    if (next.entries.empty()) {
      SolveResult r;
      r.status = SolveStatus::infeasible;
      r.detail = "frontier emptied at step " + std::to_string(next.step) +
                 ": no sequence can be advanced further";
      return r;
    }
    stats.steps = next.step;
    history.push_back(std::move(next));
  }
}

std::vector<GridVertex> maximal_reachable_impl(const Instance& inst, const GridVertex& v,
                                               int crit, std::uint64_t* calls) {
  const int m = inst.num_sequences();
  if (m == 0) return {};
  const auto last = static_cast<std::size_t>(m - 1);
  std::vector<int> room(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    room[static_cast<std::size_t>(i)] = inst.length(i) - v[static_cast<std::size_t>(i)];

  auto try_edge = [&](const GridVertex& target) {
    if (calls) ++*calls;
    return edge_label_valid(inst, v, target, crit);
  };

  std::vector<GridVertex> found;
  std::vector<int> d(static_cast<std::size_t>(m), 0);
  for (;;) {
    GridVertex target(static_cast<std::size_t>(m));
    bool prefix_nonzero = false;
    for (std::size_t i = 0; i < last; ++i) {
      target[i] = v[i] + d[i];
      prefix_nonzero = prefix_nonzero || d[i] > 0;
    }
    // Descending scan: the first valid last-coordinate is the row's Pareto
    // best, since everything below it in the row shares the prefix.
    bool hit = false;
    for (int b = room[last]; b >= 1 && !hit; --b) {
      target[last] = v[last] + b;
      if (try_edge(target)) {
        found.push_back(target);
        hit = true;
      }
    }
    if (!hit && prefix_nonzero) {
      target[last] = v[last];
      if (try_edge(target)) found.push_back(target);
    }
    int i = m - 2;
    while (i >= 0 && d[static_cast<std::size_t>(i)] == room[static_cast<std::size_t>(i)]) {
      d[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++d[static_cast<std::size_t>(i)];
  }
  return maximal_set(found);
}

}  // namespace

GridVertex greedy_advance(const GridVertex& v, int crit, const ReachTables& rt) {
  GridVertex g(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    g[i] = rt.reach(crit, static_cast<int>(i), v[i]);
  return g;
}

Frontier initial_frontier(const Instance& inst) {
  Frontier f;
  f.entries.push_back({source_vertex(inst), -1, -1});
  return f;
}

Frontier next_frontier(const Instance& inst, const ReachTables& rt, const Frontier& current) {
  std::vector<FrontierEntry> candidates;
  for (std::size_t e = 0; e < current.entries.size(); ++e) {
    const GridVertex& v = current.entries[e].vertex;
    for (int c = 0; c < inst.num_criteria(); ++c) {
      GridVertex g = greedy_advance(v, c, rt);
      if (g != v) candidates.push_back({std::move(g), c, static_cast<int>(e)});
    }
  }
  std::sort(candidates.begin(), candidates.end(), candidate_less);
  Frontier next;
  next.step = current.step + 1;
  next.candidates_generated = candidates.size();
  next.entries = finalize_pairwise(std::move(candidates));
  return next;
}

SolveResult solve_frontier_independent(const Instance& inst, const FrontierOptions& options) {
  require_searchable(inst);
  if (!all_monotone_independent(inst))
    throw std::invalid_argument(
        "frontier antichain search needs monotone decreasing, independent criteria");
  if (auto witness = find_uncoverable_state(inst)) return infeasible_from_witness(*witness, inst);

  const ReachTables rt = build_reach_tables(inst);
  return run_frontier(inst, options,
                      [&](const Frontier& current, std::vector<FrontierEntry>& out,
                          BudgetGuard& guard) -> std::uint64_t {
                        for (std::size_t e = 0; e < current.entries.size(); ++e) {
                          if (guard.exceeded()) return 0;
                          const GridVertex& v = current.entries[e].vertex;
                          for (int c = 0; c < inst.num_criteria(); ++c) {
                            GridVertex g = greedy_advance(v, c, rt);
                            if (g != v) out.push_back({std::move(g), c, static_cast<int>(e)});
                          }
                        }
                        return 0;
                      });
}

std::vector<GridVertex> maximal_reachable_dependent(const Instance& inst, const GridVertex& v,
                                                    int crit) {
  return maximal_reachable_impl(inst, v, crit, nullptr);
}

SolveResult solve_frontier_dependent(const Instance& inst, const FrontierOptions& options) {
  require_searchable(inst);
  if (!all_monotone(inst))
    throw std::invalid_argument("frontier sweep search needs monotone decreasing criteria");
  if (auto witness = find_uncoverable_state(inst)) return infeasible_from_witness(*witness, inst);

  return run_frontier(inst, options,
                      [&](const Frontier& current, std::vector<FrontierEntry>& out,
                          BudgetGuard& guard) -> std::uint64_t {
                        std::uint64_t calls = 0;
                        for (std::size_t e = 0; e < current.entries.size(); ++e) {
                          for (int c = 0; c < inst.num_criteria(); ++c) {
                            if (guard.exceeded()) return calls;
                            for (GridVertex& g : maximal_reachable_impl(
                                     inst, current.entries[e].vertex, c, &calls))
                              out.push_back({std::move(g), c, static_cast<int>(e)});
                          }
                        }
                        return calls;
                      });
}

}  // namespace flowdiag
