#include "flowdiag/exact.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowdiag/reach.hpp"
#include "search_util.hpp"

namespace flowdiag {

using detail::budget_exhausted;
using detail::infeasible_from_witness;
using detail::require_searchable;

namespace {

struct VisitInfo {
  GridVertex parent;
  int criterion = -1;
  int dist = 0;
};

using VisitedMap = std::unordered_map<GridVertex, VisitInfo, GridVertexHash>;

std::vector<PathStep> backtrack(const VisitedMap& visited, const GridVertex& source,
                                GridVertex at) {
  std::vector<PathStep> steps;
  while (at != source) {
    const VisitInfo& info = visited.at(at);
    steps.push_back({info.criterion, info.parent, at});
    at = info.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

/// Lex-ascending mixed-radix enumeration of every v' with v <= v' <= corner.
/// Starts at v; returns false once the range is exhausted.
bool next_target(GridVertex& cur, const GridVertex& low, const GridVertex& high) {
  for (int i = static_cast<int>(cur.size()) - 1; i >= 0; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (cur[ui] < high[ui]) {
      ++cur[ui];
      for (std::size_t j = ui + 1; j < cur.size(); ++j) cur[j] = low[j];
      return true;
    }
  }
  return false;
}

}  // namespace

bool edge_label_valid(const Instance& inst, const GridVertex& v, const GridVertex& v2,
                      int crit) {
  std::vector<SegmentRef> segments;
  for (int i = 0; i < inst.num_sequences(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (v2[ui] < v[ui]) return false;
    if (v2[ui] > v[ui]) segments.push_back({i, v[ui], v2[ui]});
  }
  if (segments.empty()) return false;
  return joint_fulfils(inst, crit, segments);
}

SolveResult solve_exact(const Instance& inst, const ExactOptions& options) {
  require_searchable(inst);
  BudgetGuard guard(options.limits);
  SolveStats stats;

  if (auto witness = find_uncoverable_state(inst)) return infeasible_from_witness(*witness, inst);

  const int m = inst.num_sequences();
  const int k = inst.num_criteria();
  const GridVertex source = source_vertex(inst);
  const GridVertex corner = corner_vertex(inst);

  const bool pruned = options.monotone_pruning && all_monotone_independent(inst);
  ReachTables rt;
  if (pruned) rt = build_reach_tables(inst);

  VisitedMap visited;
  visited.emplace(source, VisitInfo{source, -1, 0});
  std::deque<GridVertex> queue{source};

  auto finish = [&](const GridVertex& goal) {
    const auto steps = backtrack(visited, source, goal);
    Solution sol = assemble_solution(inst, steps);
    sol.stats.cpu_seconds = guard.elapsed();
    sol.stats.expanded = stats.expanded;
    sol.stats.candidates = stats.candidates;
    sol.stats.oracle_calls = stats.oracle_calls;
    sol.stats.steps = static_cast<int>(steps.size());
    SolveResult r;
    r.solution = std::move(sol);
    return r;
  };

  while (!queue.empty()) {
    if (guard.exceeded()) return budget_exhausted(guard, stats.expanded);
    const GridVertex v = std::move(queue.front());
    queue.pop_front();
    const int dist = visited.at(v).dist;
    ++stats.expanded;

    if (pruned) {
      for (int c = 0; c < k; ++c) {
        GridVertex g(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
          g[static_cast<std::size_t>(i)] = rt.reach(c, i, v[static_cast<std::size_t>(i)]);
        if (g == v) continue;
        ++stats.candidates;
        if (visited.emplace(g, VisitInfo{v, c, dist + 1}).second) {
          if (g == corner) return finish(g);
          queue.push_back(std::move(g));
        }
      }
    } else {
      for (int c = 0; c < k; ++c) {
        GridVertex target = v;
        while (next_target(target, v, corner)) {
          if (guard.exceeded()) return budget_exhausted(guard, stats.expanded);
          ++stats.candidates;
          if (visited.count(target)) continue;  // cheaper than the oracle
          ++stats.oracle_calls;
          if (!edge_label_valid(inst, v, target, c)) continue;
          visited.emplace(target, VisitInfo{v, c, dist + 1});
          if (target == corner) return finish(target);
          queue.push_back(target);
        }
      }
    }
  }

  SolveResult r;
  r.status = SolveStatus::infeasible;
  r.detail = "search space exhausted after " + std::to_string(stats.expanded) +
             " vertices without consuming every sequence";
  return r;
}

SolveResult solve_reference(const Instance& inst, const ReferenceOptions& options) {
  require_searchable(inst);
  BudgetGuard guard(options.limits);
  SolveStats stats;

  const int m = inst.num_sequences();
  const int k = inst.num_criteria();
  const GridVertex source = source_vertex(inst);
  const GridVertex corner = corner_vertex(inst);

  long double vertex_est = 1, pair_est = 1;
  for (int i = 0; i < m; ++i) {
    const long double side = inst.length(i) + 1;
    vertex_est *= side;
    pair_est *= side * (side + 1) / 2;
  }
  pair_est *= k == 0 ? 1 : k;
  if (vertex_est > static_cast<long double>(options.max_vertices)) {
    SolveResult r;
    r.status = SolveStatus::cap_exceeded;
    r.detail = "grid has more vertices than the reference solver materializes";
    return r;
  }
  if (pair_est > static_cast<long double>(options.max_edge_candidates)) {
    SolveResult r;
    r.status = SolveStatus::cap_exceeded;
    r.detail = "grid has more edge candidates than the reference solver scans";
    return r;
  }

  std::vector<long> stride(static_cast<std::size_t>(m), 1);
  for (int i = m - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] =
        stride[static_cast<std::size_t>(i + 1)] * (inst.length(i + 1) + 1);
  const long num_vertices = stride[0] * (inst.length(0) + 1);
  auto index_of = [&](const GridVertex& v) {
    long idx = 0;
    for (int i = 0; i < m; ++i) idx += stride[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    return idx;
  };

  struct Arc {
    long to;
    int criterion;
  };
  std::vector<std::vector<Arc>> adjacency(static_cast<std::size_t>(num_vertices));
  GridVertex v = source;
  do {
    const long from = index_of(v);
    for (int c = 0; c < k; ++c) {
      GridVertex target = v;
      while (next_target(target, v, corner)) {
        if (guard.exceeded()) return budget_exhausted(guard, stats.expanded);
        ++stats.candidates;
        ++stats.oracle_calls;
        if (edge_label_valid(inst, v, target, c))
          adjacency[static_cast<std::size_t>(from)].push_back({index_of(target), c});
      }
    }
  } while (next_target(v, source, corner));

  struct Prev {
    long from = -1;
    int criterion = -1;
  };
  std::vector<Prev> prev(static_cast<std::size_t>(num_vertices));
  std::vector<char> seen(static_cast<std::size_t>(num_vertices), 0);
  std::deque<long> queue{index_of(source)};
  seen[static_cast<std::size_t>(index_of(source))] = 1;
  const long goal = index_of(corner);

  auto vertex_at = [&](long idx) {
    GridVertex out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      out[static_cast<std::size_t>(i)] = static_cast<int>(idx / stride[static_cast<std::size_t>(i)]);
      idx %= stride[static_cast<std::size_t>(i)];
    }
    return out;
  };

  while (!queue.empty()) {
    if (guard.exceeded()) return budget_exhausted(guard, stats.expanded);
    const long u = queue.front();
    queue.pop_front();
    ++stats.expanded;
    if (u == goal) {
      std::vector<PathStep> steps;
      for (long at = goal; at != index_of(source); at = prev[static_cast<std::size_t>(at)].from)
        steps.push_back({prev[static_cast<std::size_t>(at)].criterion,
                         vertex_at(prev[static_cast<std::size_t>(at)].from), vertex_at(at)});
      std::reverse(steps.begin(), steps.end());
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
    for (const Arc& arc : adjacency[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(arc.to)]) continue;
      seen[static_cast<std::size_t>(arc.to)] = 1;
      prev[static_cast<std::size_t>(arc.to)] = {u, arc.criterion};
      queue.push_back(arc.to);
    }
  }

  SolveResult r;
  r.status = SolveStatus::infeasible;
  r.detail = "no source-to-corner path in the materialized grid";
  return r;
}

}  // namespace flowdiag
