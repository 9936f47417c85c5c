#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flowdiag/criteria.hpp"
#include "flowdiag/types.hpp"

namespace flowdiag {

/// Serializable criterion description.  `kind` is one of label, formation,
/// ball, table; exactly the matching params member is meaningful.
struct CriterionSpec {
  std::string id;
  std::string name;
  std::string kind;
  CriterionFlags flags;

  std::string tag;                // label
  FormationTriple triple{0, 0, 0};  // formation
  std::string which;              // ball
  std::map<std::string, std::vector<std::pair<int, int>>> intervals;  // table

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// File-facing bundle of sequences and criterion descriptions.
struct Dataset {
  std::vector<StateSequence> sequences;
  std::vector<CriterionSpec> criteria;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Canonical flags for a criterion kind ("table" takes the monotone flag from
/// the spec, the rest are fully determined by the kind).
CriterionFlags canonical_flags(const CriterionSpec& spec);

/// Materialize the oracle for one criterion spec.
Criterion make_criterion(const CriterionSpec& spec);

/// Materialize oracles for the whole dataset.
Instance make_instance(const Dataset& dataset);

}  // namespace flowdiag
