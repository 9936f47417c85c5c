#include "flowdiag/dataset.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace flowdiag {

CriterionFlags canonical_flags(const CriterionSpec& spec) {
  if (spec.kind == "label" || spec.kind == "formation") return {true, true, true};
  if (spec.kind == "ball") return {true, true, false};
  if (spec.kind == "table") return {spec.flags.monotone_decreasing, true, false};
  throw std::invalid_argument("unknown criterion kind: " + spec.kind);
}

Criterion make_criterion(const CriterionSpec& spec) {
  Criterion c;
  if (spec.kind == "label") {
    c = label_criterion(spec.id, spec.name, spec.tag);
  } else if (spec.kind == "formation") {
    c = formation_criterion(spec.triple);
    c.id = spec.id;
    c.name = spec.name;
  } else if (spec.kind == "ball") {
    c = ball_criterion(spec.which);
    c.id = spec.id;
    c.name = spec.name;
  } else if (spec.kind == "table") {
    c = table_criterion(spec.id, spec.name, spec.flags.monotone_decreasing, spec.intervals);
  } else {
    throw std::invalid_argument("unknown criterion kind: " + spec.kind);
  }
  c.flags = canonical_flags(spec);
  return c;
}

Instance make_instance(const Dataset& dataset) {
  Instance inst;
  std::set<std::string> ids;
  for (const auto& seq : dataset.sequences)
    if (!ids.insert(seq.id).second)
      throw std::invalid_argument("duplicate sequence id: " + seq.id);
  ids.clear();
  for (const auto& spec : dataset.criteria)
    if (!ids.insert(spec.id).second)
      throw std::invalid_argument("duplicate criterion id: " + spec.id);

  inst.sequences = dataset.sequences;
  inst.criteria.reserve(dataset.criteria.size());
  for (const auto& spec : dataset.criteria) inst.criteria.push_back(make_criterion(spec));
  return inst;
}

}  // namespace flowdiag
