#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include <sys/resource.h>

#include "flowdiag/grid.hpp"
#include "flowdiag/solve.hpp"
#include "flowdiag/types.hpp"

namespace flowdiag {

bool State::has_label(std::string_view tag) const {
  return std::find(labels.begin(), labels.end(), tag) != labels.end();
}

long Instance::total_length() const {
  long total = 0;
  for (const auto& s : sequences) total += s.length();
  return total;
}

static void check_segments(const Instance& inst, std::span<const SegmentRef> segments) {
  if (segments.empty()) throw std::invalid_argument("joint_fulfils: empty segment set");
  for (const auto& s : segments) {
    if (s.seq < 0 || s.seq >= inst.num_sequences())
      throw std::invalid_argument("joint_fulfils: segment sequence out of range");
    if (s.a < 0 || s.a >= s.b || s.b > inst.length(s.seq))
      throw std::invalid_argument("joint_fulfils: bad segment cursors");
  }
}

bool joint_fulfils(const Instance& inst, int crit, std::span<const SegmentRef> segments) {
  if (crit < 0 || crit >= inst.num_criteria())
    throw std::invalid_argument("joint_fulfils: criterion out of range");
  check_segments(inst, segments);
  const Criterion& c = inst.criteria[static_cast<std::size_t>(crit)];
  if (c.flags.independent) {
    for (const auto& s : segments) {
      const SegmentRef one[] = {s};
      if (!c.oracle(inst.sequences, one)) return false;
    }
    return true;
  }
  return c.oracle(inst.sequences, segments);
}

bool fulfils_single(const Instance& inst, int crit, const SegmentRef& segment) {
  const SegmentRef one[] = {segment};
  return joint_fulfils(inst, crit, one);
}

bool all_monotone_independent(const Instance& inst) {
  return std::all_of(inst.criteria.begin(), inst.criteria.end(), [](const Criterion& c) {
    return c.flags.monotone_decreasing && c.flags.independent;
  });
}

bool all_monotone(const Instance& inst) {
  return std::all_of(inst.criteria.begin(), inst.criteria.end(),
                     [](const Criterion& c) { return c.flags.monotone_decreasing; });
}

bool dominates(const GridVertex& u, const GridVertex& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dominates: arity mismatch");
  bool strict = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < v[i]) return false;
    if (u[i] > v[i]) strict = true;
  }
  return strict;
}

std::vector<GridVertex> maximal_set(const std::vector<GridVertex>& vertices) {
  std::vector<GridVertex> sorted = vertices;
  for (const auto& v : sorted)
    if (v.size() != sorted.front().size())
      throw std::invalid_argument("maximal_set: arity mismatch");
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<GridVertex> result;
  for (const auto& v : sorted) {
    bool dominated = false;
    for (const auto& u : sorted) {
      if (dominates(u, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.push_back(v);
  }
  return result;
}

bool lex_less(const GridVertex& a, const GridVertex& b) { return a < b; }

GridVertex source_vertex(const Instance& inst) {
  return GridVertex(static_cast<std::size_t>(inst.num_sequences()), 0);
}

GridVertex corner_vertex(const Instance& inst) {
  GridVertex v(static_cast<std::size_t>(inst.num_sequences()));
  for (int i = 0; i < inst.num_sequences(); ++i) v[static_cast<std::size_t>(i)] = inst.length(i);
  return v;
}

std::size_t GridVertexHash::operator()(const GridVertex& v) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

int FlowDiagram::source_id() const {
  int found = -1;
  for (const auto& n : nodes) {
    if (n.kind == NodeKind::source) {
      if (found >= 0) return -1;
      found = n.id;
    }
  }
  return found;
}

int FlowDiagram::sink_id() const {
  int found = -1;
  for (const auto& n : nodes) {
    if (n.kind == NodeKind::sink) {
      if (found >= 0) return -1;
      found = n.id;
    }
  }
  return found;
}

std::size_t fd_size(const FlowDiagram& fd) { return fd.nodes.size(); }

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::beam_dead_end: return "beam-dead-end";
    case SolveStatus::budget_exceeded: return "budget-exceeded";
    case SolveStatus::cap_exceeded: return "cap-exceeded";
  }
  return "unknown";
}

Solution assemble_solution(const Instance& inst, std::span<const PathStep> steps) {
  const int m = inst.num_sequences();
  const int r = static_cast<int>(steps.size());
  Solution sol;
  sol.diagram.nodes.push_back({0, NodeKind::source, -1});
  for (int j = 0; j < r; ++j)
    sol.diagram.nodes.push_back({j + 1, NodeKind::criterion, steps[static_cast<std::size_t>(j)].criterion});
  sol.diagram.nodes.push_back({r + 1, NodeKind::sink, -1});

  std::map<std::pair<int, int>, long> weights;
  sol.certificates.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Certificate& cert = sol.certificates[static_cast<std::size_t>(i)];
    cert.seq = i;
    int prev = 0;
    for (int j = 0; j < r; ++j) {
      const PathStep& st = steps[static_cast<std::size_t>(j)];
      const int from = st.from[static_cast<std::size_t>(i)];
      const int to = st.to[static_cast<std::size_t>(i)];
      if (to > from) {
        cert.parts.push_back({SegmentRef{i, from, to}, st.criterion, j + 1});
        ++weights[{prev, j + 1}];
        prev = j + 1;
      }
    }
    ++weights[{prev, r + 1}];
  }
  for (const auto& [key, w] : weights) sol.diagram.edges.push_back({key.first, key.second, w});
  sol.stats.path_edges = r + 1;
  return sol;
}

double process_cpu_seconds() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  auto tv = [](const timeval& t) { return static_cast<double>(t.tv_sec) + 1e-6 * static_cast<double>(t.tv_usec); };
  return tv(ru.ru_utime) + tv(ru.ru_stime);
}

long process_peak_rss_kb() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return ru.ru_maxrss;
}

BudgetGuard::BudgetGuard(const SearchLimits& limits)
    : limits_(limits), start_cpu_(process_cpu_seconds()) {}

bool BudgetGuard::exceeded() {
  if (exceeded_) return true;
  if (limits_.max_cpu_seconds <= 0 && limits_.max_memory_kb <= 0) return false;
  if (calls_++ % 256 != 0) return false;
  if (limits_.max_cpu_seconds > 0 && process_cpu_seconds() - start_cpu_ > limits_.max_cpu_seconds)
    exceeded_ = true;
  if (limits_.max_memory_kb > 0 && process_peak_rss_kb() > limits_.max_memory_kb)
    exceeded_ = true;
  return exceeded_;
}

double BudgetGuard::elapsed() const { return process_cpu_seconds() - start_cpu_; }

}  // namespace flowdiag
