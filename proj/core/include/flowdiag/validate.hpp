#pragma once

#include <span>
#include <string>

#include "flowdiag/diagram.hpp"
#include "flowdiag/types.hpp"

namespace flowdiag {

enum class ValidationClause {
  none,
  structure,           // terminals, cycles, duplicate edges, orphan nodes, bad ids
  certificate_set,     // not exactly one certificate per sequence
  path,                // certificate path uses a node or edge the diagram lacks
  criterion_mismatch,  // a part's criterion differs from its node's label
  coverage_gap,        // gap, overlap, empty segment, or wrong endpoints
  fulfilment,          // segments grouped at a node fail its criterion oracle
  weights,             // edge weight != certificate traversal count
};

const char* to_string(ValidationClause c);

struct Validation {
  bool valid = true;
  ValidationClause clause = ValidationClause::none;
  std::string detail;
};

/// Check a diagram with certificates against the instance it claims to
/// summarize: diagram structure, exactly one certificate per sequence, path
/// existence with matching node labels, segmentation coverage, joint
/// fulfilment of the segments grouped at each node (single-segment calls for
/// independent criteria), and edge weights equal to traversal counts.
/// Reports the first violated clause.
Validation validate(const Instance& inst, const FlowDiagram& fd,
                    std::span<const Certificate> certificates);

}  // namespace flowdiag
