#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "flowdiag/dataset.hpp"
#include "flowdiag/diagram.hpp"
#include "flowdiag/types.hpp"

namespace flowdiag {

/// Canonical JSON for a dataset (keys sorted, shortest round-trip numbers).
std::string dataset_to_json(const Dataset& dataset);

/// Parses dataset JSON; throws std::runtime_error with a location hint on
/// malformed input.
Dataset dataset_from_json(const std::string& text);

/// Canonical JSON for a diagram plus certificates.  Nodes carry the criterion
/// id as `label` and the display name as `name` so the file renders without
/// the dataset at hand.
std::string diagram_to_json(const Instance& inst, const FlowDiagram& fd,
                            std::span<const Certificate> certificates);

struct DiagramFile {
  FlowDiagram diagram;
  std::vector<Certificate> certificates;
};

/// Parses diagram JSON, resolving criterion and sequence ids against `inst`.
DiagramFile diagram_from_json(const Instance& inst, const std::string& text);

struct DotOptions {
  /// Criterion ids whose nodes get a grey fill.
  std::set<std::string> significant = {"SG", "SNG", "LB", "CFB"};
};

/// Deterministic DOT rendering: nodes by id with the source as a circle and
/// the sink as a double circle, edges by (from, to) labelled with weights.
std::string to_dot(const Instance& inst, const FlowDiagram& fd, const DotOptions& options = {});

/// DOT straight from diagram JSON (no dataset needed).
std::string dot_from_diagram_json(const std::string& text, const DotOptions& options = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace flowdiag
