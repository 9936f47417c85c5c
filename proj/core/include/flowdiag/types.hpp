#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flowdiag {

/// One observed state: a set of label tags plus optional planar position,
/// timestamp and event kind for trajectory-style data.  Positions use the
/// attack direction as x and the goal-line direction as y, in metres.
struct State {
  std::vector<std::string> labels;
  std::optional<double> x;
  std::optional<double> y;
  std::optional<double> t;
  std::optional<std::string> event;

  bool has_label(std::string_view tag) const;

  friend bool operator==(const State&, const State&) = default;
};

struct StateSequence {
  std::string id;
  std::vector<State> states;

  int length() const { return static_cast<int>(states.size()); }

  friend bool operator==(const StateSequence&, const StateSequence&) = default;
};

/// Cursor pair into a sequence: states a+1..b (1-based states), 0 <= a <= b <= n.
/// Empty iff a == b.
struct SegmentRef {
  int seq = 0;
  int a = 0;
  int b = 0;

  bool empty() const { return a == b; }
  int length() const { return b - a; }

  friend bool operator==(const SegmentRef&, const SegmentRef&) = default;
};

struct CriterionFlags {
  /// Fulfilled sets stay fulfilled on any non-empty set of non-empty
  /// contiguous sub-segments (dropping whole segments is allowed).
  bool monotone_decreasing = false;
  /// The verdict for a segment never depends on segments of other sequences.
  bool independent = false;
  /// Per-state membership; implies monotone_decreasing and independent.
  bool fixed = false;

  friend bool operator==(const CriterionFlags&, const CriterionFlags&) = default;
};

/// Joint fulfilment test.  Receives a non-empty set of non-empty segments,
/// at most one per sequence.
using OracleFn = std::function<bool(const std::vector<StateSequence>&,
                                    std::span<const SegmentRef>)>;

struct Criterion {
  std::string id;
  std::string name;
  CriterionFlags flags;
  OracleFn oracle;
};

struct Instance {
  std::vector<StateSequence> sequences;
  std::vector<Criterion> criteria;

  int num_sequences() const { return static_cast<int>(sequences.size()); }
  int num_criteria() const { return static_cast<int>(criteria.size()); }
  int length(int seq) const { return sequences[static_cast<std::size_t>(seq)].length(); }
  long total_length() const;
};

/// True iff the given segments jointly fulfil criterion `crit`.  Independent
/// criteria are evaluated one segment at a time; dependent criteria get a
/// single joint call.
bool joint_fulfils(const Instance& inst, int crit, std::span<const SegmentRef> segments);

/// Single-segment convenience wrapper around joint_fulfils.
bool fulfils_single(const Instance& inst, int crit, const SegmentRef& segment);

bool all_monotone_independent(const Instance& inst);
bool all_monotone(const Instance& inst);

}  // namespace flowdiag
