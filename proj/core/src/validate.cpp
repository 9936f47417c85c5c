#include "flowdiag/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace flowdiag {

const char* to_string(ValidationClause c) {
  switch (c) {
    case ValidationClause::none: return "none";
    case ValidationClause::structure: return "structure";
    case ValidationClause::certificate_set: return "certificate set";
    case ValidationClause::path: return "path";
    case ValidationClause::criterion_mismatch: return "criterion mismatch";
    case ValidationClause::coverage_gap: return "coverage gap";
    case ValidationClause::fulfilment: return "fulfilment";
    case ValidationClause::weights: return "weights";
  }
  return "unknown";
}

namespace {

Validation fail(ValidationClause clause, std::string detail) {
  return {false, clause, std::move(detail)};
}

Validation check_structure(const Instance& inst, const FlowDiagram& fd) {
  const int n = static_cast<int>(fd.nodes.size());
  if (n < 2) return fail(ValidationClause::structure, "fewer than two nodes");
  for (int i = 0; i < n; ++i)
    if (fd.nodes[static_cast<std::size_t>(i)].id != i)
      return fail(ValidationClause::structure, "node ids must be 0..N-1 in order");
  int sources = 0, sinks = 0;
  for (const auto& node : fd.nodes) {
    switch (node.kind) {
      case NodeKind::source: ++sources; break;
      case NodeKind::sink: ++sinks; break;
      case NodeKind::criterion:
        if (node.criterion < 0 || node.criterion >= inst.num_criteria())
          return fail(ValidationClause::structure,
                      "node " + std::to_string(node.id) + " has an unknown criterion");
        break;
    }
  }
  if (sources != 1 || sinks != 1)
    return fail(ValidationClause::structure, "need exactly one source and one sink");

  std::set<std::pair<int, int>> seen;
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> radj(static_cast<std::size_t>(n));
  for (const auto& e : fd.edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      return fail(ValidationClause::structure, "edge endpoint out of range");
    if (e.from == e.to) return fail(ValidationClause::structure, "self loop");
    if (e.weight < 1) return fail(ValidationClause::structure, "edge weight below 1");
    if (!seen.insert({e.from, e.to}).second)
      return fail(ValidationClause::structure, "duplicate edge");
    adj[static_cast<std::size_t>(e.from)].push_back(e.to);
    radj[static_cast<std::size_t>(e.to)].push_back(e.from);
    ++indegree[static_cast<std::size_t>(e.to)];
  }
  const int source = fd.source_id();
  const int sink = fd.sink_id();
  if (!radj[static_cast<std::size_t>(source)].empty())
    return fail(ValidationClause::structure, "source has incoming edges");
  if (!adj[static_cast<std::size_t>(sink)].empty())
    return fail(ValidationClause::structure, "sink has outgoing edges");

  // Kahn topological order to reject cycles.
  std::vector<int> queue;
  std::vector<int> degree = indegree;
  for (int i = 0; i < n; ++i)
    if (degree[static_cast<std::size_t>(i)] == 0) queue.push_back(i);
  std::size_t processed = 0;
  while (processed < queue.size()) {
    const int u = queue[processed++];
    for (int v : adj[static_cast<std::size_t>(u)])
      if (--degree[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  }
  if (processed != static_cast<std::size_t>(n))
    return fail(ValidationClause::structure, "diagram has a cycle");

  // Every labelled node must lie on a source-to-sink path.
  auto reachable = [&](int start, const std::vector<std::vector<int>>& graph) {
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{start};
    mark[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : graph[static_cast<std::size_t>(u)])
        if (!mark[static_cast<std::size_t>(v)]) {
          mark[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
    }
    return mark;
  };
  const auto from_source = reachable(source, adj);
  const auto to_sink = reachable(sink, radj);
  for (const auto& node : fd.nodes)
    if (!from_source[static_cast<std::size_t>(node.id)] || !to_sink[static_cast<std::size_t>(node.id)])
      return fail(ValidationClause::structure,
                  "node " + std::to_string(node.id) + " lies on no source-to-sink path");
  return {};
}

}  // namespace

Validation validate(const Instance& inst, const FlowDiagram& fd,
                    std::span<const Certificate> certificates) {
  if (Validation v = check_structure(inst, fd); !v.valid) return v;

  const int m = inst.num_sequences();
  if (static_cast<int>(certificates.size()) != m)
    return fail(ValidationClause::certificate_set,
                "expected one certificate per sequence, got " +
                    std::to_string(certificates.size()));
  std::vector<int> cert_of(static_cast<std::size_t>(m), -1);
  for (int ci = 0; ci < m; ++ci) {
    const int seq = certificates[static_cast<std::size_t>(ci)].seq;
    if (seq < 0 || seq >= m)
      return fail(ValidationClause::certificate_set, "certificate for unknown sequence");
    if (cert_of[static_cast<std::size_t>(seq)] >= 0)
      return fail(ValidationClause::certificate_set,
                  "duplicate certificate for sequence " + std::to_string(seq));
    cert_of[static_cast<std::size_t>(seq)] = ci;
  }

  const int source = fd.source_id();
  const int sink = fd.sink_id();
  std::set<std::pair<int, int>> edge_set;
  for (const auto& e : fd.edges) edge_set.insert({e.from, e.to});

  std::map<int, std::vector<SegmentRef>> node_segments;
  std::map<std::pair<int, int>, long> traversals;

  for (int seq = 0; seq < m; ++seq) {
    const Certificate& cert = certificates[static_cast<std::size_t>(cert_of[static_cast<std::size_t>(seq)])];
    const std::string where = "sequence " + std::to_string(seq);
    if (cert.parts.empty()) return fail(ValidationClause::path, where + ": empty certificate");

    // (a) the node path exists and its labels match the claimed criteria.
    int prev = source;
    for (const auto& part : cert.parts) {
      if (part.node < 0 || part.node >= static_cast<int>(fd.nodes.size()))
        return fail(ValidationClause::path, where + ": unknown node " + std::to_string(part.node));
      const FdNode& node = fd.nodes[static_cast<std::size_t>(part.node)];
      if (node.kind != NodeKind::criterion)
        return fail(ValidationClause::path, where + ": path visits a terminal mid-way");
      if (!edge_set.count({prev, part.node}))
        return fail(ValidationClause::path, where + ": missing edge " + std::to_string(prev) +
                                                "->" + std::to_string(part.node));
      if (node.criterion != part.criterion)
        return fail(ValidationClause::criterion_mismatch,
                    where + ": node " + std::to_string(part.node) +
                        " is labelled with a different criterion");
      prev = part.node;
    }
    if (!edge_set.count({prev, sink}))
      return fail(ValidationClause::path,
                  where + ": missing edge " + std::to_string(prev) + "->sink");

    // (b) the segmentation covers the sequence with abutting non-empty segments.
    int cursor = 0;
    for (const auto& part : cert.parts) {
      if (part.seg.seq != seq)
        return fail(ValidationClause::coverage_gap, where + ": segment of another sequence");
      if (part.seg.a != cursor)
        return fail(ValidationClause::coverage_gap,
                    where + ": segment starts at " + std::to_string(part.seg.a) +
                        ", expected " + std::to_string(cursor));
      if (part.seg.b <= part.seg.a)
        return fail(ValidationClause::coverage_gap, where + ": empty segment");
      if (part.seg.b > inst.length(seq))
        return fail(ValidationClause::coverage_gap, where + ": segment past the end");
      cursor = part.seg.b;
    }
    if (cursor != inst.length(seq))
      return fail(ValidationClause::coverage_gap,
                  where + ": segmentation stops at " + std::to_string(cursor) + " of " +
                      std::to_string(inst.length(seq)));

    prev = source;
    for (const auto& part : cert.parts) {
      node_segments[part.node].push_back(part.seg);
      ++traversals[{prev, part.node}];
      prev = part.node;
    }
    ++traversals[{prev, sink}];
  }

  // (c) the segments grouped at each node jointly fulfil its criterion.
  for (const auto& [node_id, segments] : node_segments) {
    const FdNode& node = fd.nodes[static_cast<std::size_t>(node_id)];
    if (!joint_fulfils(inst, node.criterion, segments))
      return fail(ValidationClause::fulfilment,
                  "node " + std::to_string(node_id) + ": grouped segments do not fulfil " +
                      inst.criteria[static_cast<std::size_t>(node.criterion)].id);
  }

  // (d) edge weights equal traversal counts.
  for (const auto& e : fd.edges) {
    const auto it = traversals.find({e.from, e.to});
    const long count = it == traversals.end() ? 0 : it->second;
    if (count != e.weight)
      return fail(ValidationClause::weights,
                  "edge " + std::to_string(e.from) + "->" + std::to_string(e.to) + " has weight " +
                      std::to_string(e.weight) + " but " + std::to_string(count) + " traversals");
  }
  return {};
}

}  // namespace flowdiag
