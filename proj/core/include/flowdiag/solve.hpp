#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "flowdiag/diagram.hpp"
#include "flowdiag/grid.hpp"
#include "flowdiag/types.hpp"

namespace flowdiag {

enum class SolveStatus {
  solved,
  infeasible,
  beam_dead_end,
  budget_exceeded,
  cap_exceeded,
};

const char* to_string(SolveStatus s);

struct SearchLimits {
  double max_cpu_seconds = 0;  // 0 = unlimited
  long max_memory_kb = 0;      // 0 = unlimited; checked against process peak RSS
};

struct SolveStats {
  double cpu_seconds = 0;
  std::uint64_t expanded = 0;      // vertices dequeued / frontier entries processed
  std::uint64_t candidates = 0;    // successor candidates generated
  std::uint64_t oracle_calls = 0;  // joint fulfilment tests issued by the solver
  int path_edges = 0;              // prefix-graph path length incl. the corner->sink edge
  int steps = 0;                   // frontier / beam iterations
};

struct Solution {
  FlowDiagram diagram;
  std::vector<Certificate> certificates;
  SolveStats stats;
};

struct SolveResult {
  SolveStatus status = SolveStatus::solved;
  std::optional<Solution> solution;
  std::string detail;

  bool solved() const { return status == SolveStatus::solved; }
};

/// One prefix-graph edge of a solution path.
struct PathStep {
  int criterion = -1;
  GridVertex from;
  GridVertex to;
};

/// Build the flow diagram and the per-sequence certificates for a
/// source-to-corner step list.  Nodes are numbered 0 (source), 1..r (one per
/// step, in order), r+1 (sink); edge weights count traversing sequences.
Solution assemble_solution(const Instance& inst, std::span<const PathStep> steps);

/// Cooperative CPU/RSS budget guard polled by the solvers.
class BudgetGuard {
 public:
  explicit BudgetGuard(const SearchLimits& limits);

  /// True once the budget is exhausted.  Polls the process clock on the first
  /// call and then every few hundred calls; cheap enough for inner loops.
  bool exceeded();

  /// CPU seconds (user+sys) since construction.
  double elapsed() const;

 private:
  SearchLimits limits_;
  double start_cpu_ = 0;
  std::uint64_t calls_ = 0;
  bool exceeded_ = false;
};

/// Current process CPU time (user+sys) in seconds.
double process_cpu_seconds();

/// Process peak RSS in KiB.
long process_peak_rss_kb();

}  // namespace flowdiag
