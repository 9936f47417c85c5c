#include "flowdiag/beam.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flowdiag/frontier.hpp"
#include "flowdiag/reach.hpp"
#include "search_util.hpp"

namespace flowdiag {

using detail::budget_exhausted;
using detail::infeasible_from_witness;
using detail::require_searchable;

namespace {

struct BeamCandidate {
  GridVertex vertex;
  int criterion = -1;
  int parent = -1;
  long primary = 0;
  long secondary = 0;
};

bool dedup_less(const BeamCandidate& a, const BeamCandidate& b) {
  if (a.vertex != b.vertex) return lex_less(a.vertex, b.vertex);
  if (a.criterion != b.criterion) return a.criterion < b.criterion;
  return a.parent < b.parent;
}

bool rank_less(const BeamCandidate& a, const BeamCandidate& b) {
  if (a.primary != b.primary) return a.primary > b.primary;
  if (a.secondary != b.secondary) return a.secondary > b.secondary;
  if (a.criterion != b.criterion) return a.criterion < b.criterion;
  return lex_less(a.vertex, b.vertex);
}

}  // namespace

int score_sequences(const GridVertex& v, const GridVertex& v2) {
  int advanced = 0;
  for (std::size_t i = 0; i < v.size(); ++i) advanced += v2[i] > v[i] ? 1 : 0;
  return advanced;
}

long score_timesteps(const GridVertex& v, const GridVertex& v2) {
  long consumed = 0;
  for (std::size_t i = 0; i < v.size(); ++i) consumed += v2[i] - v[i];
  return consumed;
}

SolveResult solve_beam(const Instance& inst, const BeamOptions& options) {
  require_searchable(inst);
  if (options.width < 1) throw std::invalid_argument("beam width must be at least 1");
  if (!all_monotone_independent(inst))
    throw std::invalid_argument("beam search needs monotone decreasing, independent criteria");

  BudgetGuard guard(options.limits);
  SolveStats stats;
  if (auto witness = find_uncoverable_state(inst)) return infeasible_from_witness(*witness, inst);

  const ReachTables rt = build_reach_tables(inst);
  const int k = inst.num_criteria();
  const GridVertex corner = corner_vertex(inst);

  std::vector<std::vector<FrontierEntry>> layers;
  layers.push_back({{source_vertex(inst), -1, -1}});
  const long step_cap = inst.total_length();

  auto finish = [&](int last_idx) {
    std::vector<PathStep> steps;
    int idx = last_idx;
    for (std::size_t j = layers.size() - 1; j >= 1; --j) {
      const FrontierEntry& e = layers[j][static_cast<std::size_t>(idx)];
      steps.push_back(
          {e.criterion, layers[j - 1][static_cast<std::size_t>(e.parent)].vertex, e.vertex});
      idx = e.parent;
    }
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
  };

  for (;;) {
    const std::vector<FrontierEntry>& beam = layers.back();
    if (static_cast<long>(layers.size()) > step_cap)
      throw std::logic_error("beam search exceeded the step bound");
    if (guard.exceeded()) return budget_exhausted(guard, stats.expanded);

    std::vector<BeamCandidate> candidates;
    for (std::size_t e = 0; e < beam.size(); ++e) {
      const GridVertex& v = beam[e].vertex;
      for (int c = 0; c < k; ++c) {
        GridVertex g = greedy_advance(v, c, rt);
        if (g == v) continue;
        const long seqs = score_sequences(v, g);
        const long steps_consumed = score_timesteps(v, g);
        BeamCandidate cand{std::move(g), c, static_cast<int>(e), 0, 0};
        if (options.strategy == BeamStrategy::sequences) {
          cand.primary = seqs;
          cand.secondary = steps_consumed;
        } else {
          cand.primary = steps_consumed;
          cand.secondary = seqs;
        }
        candidates.push_back(std::move(cand));
      }
      ++stats.expanded;
    }
    stats.candidates += candidates.size();
    if (stats.candidates > options.max_candidates)
      return budget_exhausted(guard, stats.expanded);

    // Goal test at generation time so the target cannot be truncated away.
    const BeamCandidate* goal = nullptr;
    for (const auto& cand : candidates)
      if (cand.vertex == corner && (goal == nullptr || dedup_less(cand, *goal))) goal = &cand;
    if (goal != nullptr) {
      layers.push_back({{goal->vertex, goal->criterion, goal->parent}});
      stats.steps = static_cast<int>(layers.size()) - 1;
      return finish(0);
    }

    if (candidates.empty()) {
      SolveResult r;
      r.status = SolveStatus::beam_dead_end;
      r.detail = "beam stalled after " + std::to_string(layers.size() - 1) + " steps";
      return r;
    }

    std::sort(candidates.begin(), candidates.end(), dedup_less);
    std::vector<BeamCandidate> unique;
    for (auto& cand : candidates)
      if (unique.empty() || unique.back().vertex != cand.vertex) unique.push_back(std::move(cand));
    std::vector<BeamCandidate> kept;
    std::vector<char> keep(unique.size(), 1);
    for (std::size_t i = 0; i < unique.size(); ++i)
      for (std::size_t j = 0; j < unique.size() && keep[i]; ++j)
        if (j != i && dominates(unique[j].vertex, unique[i].vertex)) keep[i] = 0;
    for (std::size_t i = 0; i < unique.size(); ++i)
      if (keep[i]) kept.push_back(std::move(unique[i]));
    std::sort(kept.begin(), kept.end(), rank_less);
    if (static_cast<int>(kept.size()) > options.width)
      kept.resize(static_cast<std::size_t>(options.width));

    std::vector<FrontierEntry> next;
    next.reserve(kept.size());
    for (auto& cand : kept)
      next.push_back({std::move(cand.vertex), cand.criterion, cand.parent});
    stats.steps = static_cast<int>(layers.size());
    layers.push_back(std::move(next));
  }
}

}  // namespace flowdiag
