#pragma once

// Internal helpers shared by the solver translation units.  Not installed.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "flowdiag/solve.hpp"
#include "flowdiag/types.hpp"

namespace flowdiag::detail {

inline void require_searchable(const Instance& inst) {
  if (inst.num_sequences() == 0) throw std::invalid_argument("no sequences");
  for (const auto& seq : inst.sequences)
    if (seq.length() == 0)
      throw std::invalid_argument("sequence " + seq.id + " is empty");
}

inline SolveResult infeasible_from_witness(const std::pair<int, int>& witness,
                                           const Instance& inst) {
  SolveResult r;
  r.status = SolveStatus::infeasible;
  r.detail = "state " + std::to_string(witness.second) + " of sequence " +
             inst.sequences[static_cast<std::size_t>(witness.first)].id +
             " lies in no fulfilled segment";
  return r;
}

inline SolveResult budget_exhausted(const BudgetGuard& guard, std::uint64_t expanded) {
  SolveResult r;
  r.status = SolveStatus::budget_exceeded;
  r.detail = "budget exhausted after " + std::to_string(expanded) + " expansions (" +
             std::to_string(guard.elapsed()) + "s cpu)";
  return r;
}

}  // namespace flowdiag::detail
