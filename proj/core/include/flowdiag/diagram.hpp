#pragma once

#include <cstddef>
#include <vector>

#include "flowdiag/types.hpp"

namespace flowdiag {

enum class NodeKind { source, sink, criterion };

struct FdNode {
  int id = 0;
  NodeKind kind = NodeKind::criterion;
  int criterion = -1;  // index into Instance::criteria when kind == criterion

  friend bool operator==(const FdNode&, const FdNode&) = default;
};

struct FdEdge {
  int from = 0;
  int to = 0;
  long weight = 0;

  friend bool operator==(const FdEdge&, const FdEdge&) = default;
};

/// Node-labelled DAG with one source and one sink in which a segmentation of
/// every input sequence appears as a source-to-sink path.
struct FlowDiagram {
  std::vector<FdNode> nodes;  // nodes[i].id == i
  std::vector<FdEdge> edges;

  /// Index of the unique source/sink node; -1 when absent or ambiguous.
  int source_id() const;
  int sink_id() const;

  friend bool operator==(const FlowDiagram&, const FlowDiagram&) = default;
};

/// Node count including both terminals.
std::size_t fd_size(const FlowDiagram& fd);

/// One entry of a sequence's certificate: the segment, the criterion the
/// covering node is labelled with, and that node's id.
struct CertificatePart {
  SegmentRef seg;
  int criterion = -1;
  int node = -1;

  friend bool operator==(const CertificatePart&, const CertificatePart&) = default;
};

/// Per-sequence witness: a segmentation and the source-to-sink node path it
/// follows (terminals implicit).
struct Certificate {
  int seq = 0;
  std::vector<CertificatePart> parts;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

}  // namespace flowdiag
