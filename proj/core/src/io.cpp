#include "flowdiag/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace flowdiag {

using nlohmann::json;

namespace {

json state_to_json(const State& s) {
  json j;
  j["labels"] = s.labels;
  if (s.x) j["x"] = *s.x;
  if (s.y) j["y"] = *s.y;
  if (s.t) j["t"] = *s.t;
  if (s.event) j["event"] = *s.event;
  return j;
}

State state_from_json(const json& j) {
  State s;
  s.labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("x")) s.x = j.at("x").get<double>();
  if (j.contains("y")) s.y = j.at("y").get<double>();
  if (j.contains("t")) s.t = j.at("t").get<double>();
  if (j.contains("event")) s.event = j.at("event").get<std::string>();
  return s;
}

json flags_to_json(const CriterionFlags& f) {
  json j;
  j["fixed"] = f.fixed;
  j["independent"] = f.independent;
  j["monotone_decreasing"] = f.monotone_decreasing;
  return j;
}

std::string escape_dot(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

struct DotNode {
  int id = 0;
  char kind = 'c';
  std::string label;
};

std::string render_dot(std::vector<DotNode> nodes, std::vector<FdEdge> edges,
                       const DotOptions& options) {
  std::sort(nodes.begin(), nodes.end(), [](const DotNode& a, const DotNode& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(), [](const FdEdge& a, const FdEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  std::ostringstream out;
  out << "digraph flow_diagram {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box, style=filled, fillcolor=white];\n";
  for (const DotNode& n : nodes) {
    out << "  n" << n.id << " [label=\"" << escape_dot(n.label) << "\"";
    if (n.kind == 's') out << ", shape=circle";
    if (n.kind == 't') out << ", shape=doublecircle";
    if (n.kind == 'c' && options.significant.count(n.label)) out << ", fillcolor=lightgrey";
    out << "];\n";
  }
  for (const FdEdge& e : edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.weight << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string dataset_to_json(const Dataset& dataset) {
  json j;
  j["sequences"] = json::array();
  for (const auto& seq : dataset.sequences) {
    json js;
    js["id"] = seq.id;
    js["states"] = json::array();
    for (const auto& s : seq.states) js["states"].push_back(state_to_json(s));
    j["sequences"].push_back(std::move(js));
  }
  j["criteria"] = json::array();
  for (const auto& spec : dataset.criteria) {
    json jc;
    jc["id"] = spec.id;
    jc["name"] = spec.name;
    jc["kind"] = spec.kind;
    jc["flags"] = flags_to_json(spec.flags);
    json params;
    if (spec.kind == "label") {
      params["tag"] = spec.tag;
    } else if (spec.kind == "formation") {
      params["triple"] = spec.triple;
    } else if (spec.kind == "ball") {
      params["which"] = spec.which;
    } else if (spec.kind == "table") {
      json intervals;
      for (const auto& [seq_id, spans] : spec.intervals) {
        json arr = json::array();
        for (const auto& [a, b] : spans) arr.push_back(json::array({a, b}));
        intervals[seq_id] = std::move(arr);
      }
      params["intervals"] = std::move(intervals);
    } else {
      throw std::invalid_argument("unknown criterion kind: " + spec.kind);
    }
    jc["params"] = std::move(params);
    j["criteria"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

Dataset dataset_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("dataset parse: ") + e.what());
  }
  try {
    Dataset ds;
    for (const auto& js : j.at("sequences")) {
      StateSequence seq;
      seq.id = js.at("id").get<std::string>();
      for (const auto& s : js.at("states")) seq.states.push_back(state_from_json(s));
      ds.sequences.push_back(std::move(seq));
    }
    for (const auto& jc : j.at("criteria")) {
      CriterionSpec spec;
      spec.id = jc.at("id").get<std::string>();
      spec.name = jc.at("name").get<std::string>();
      spec.kind = jc.at("kind").get<std::string>();
      const json& f = jc.at("flags");
      spec.flags.fixed = f.at("fixed").get<bool>();
      spec.flags.independent = f.at("independent").get<bool>();
      spec.flags.monotone_decreasing = f.at("monotone_decreasing").get<bool>();
      const json& params = jc.at("params");
      if (spec.kind == "label") {
        spec.tag = params.at("tag").get<std::string>();
      } else if (spec.kind == "formation") {
        const auto triple = params.at("triple").get<std::vector<int>>();
        if (triple.size() != 3) throw std::runtime_error("formation triple needs 3 classes");
        std::copy(triple.begin(), triple.end(), spec.triple.begin());
      } else if (spec.kind == "ball") {
        spec.which = params.at("which").get<std::string>();
      } else if (spec.kind == "table") {
        for (const auto& [seq_id, arr] : params.at("intervals").items()) {
          std::vector<std::pair<int, int>> spans;
          for (const auto& span : arr) {
            if (!span.is_array() || span.size() != 2)
              throw std::runtime_error("interval entries are [a, b] pairs");
            spans.emplace_back(span[0].get<int>(), span[1].get<int>());
          }
          spec.intervals[seq_id] = std::move(spans);
        }
      } else {
        throw std::runtime_error("unknown criterion kind: " + spec.kind);
      }
      ds.criteria.push_back(std::move(spec));
    }
    return ds;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("dataset schema: ") + e.what());
  }
}

std::string diagram_to_json(const Instance& inst, const FlowDiagram& fd,
                            std::span<const Certificate> certificates) {
  json j;
  j["nodes"] = json::array();
  for (const auto& node : fd.nodes) {
    json jn;
    jn["id"] = node.id;
    if (node.kind == NodeKind::source) {
      jn["kind"] = "s";
      jn["label"] = "s";
      jn["name"] = "source";
    } else if (node.kind == NodeKind::sink) {
      jn["kind"] = "t";
      jn["label"] = "t";
      jn["name"] = "sink";
    } else {
      const auto& crit = inst.criteria.at(static_cast<std::size_t>(node.criterion));
      jn["kind"] = "c";
      jn["label"] = crit.id;
      jn["name"] = crit.name;
    }
    j["nodes"].push_back(std::move(jn));
  }
  std::vector<FdEdge> edges = fd.edges;
  std::sort(edges.begin(), edges.end(), [](const FdEdge& a, const FdEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  j["edges"] = json::array();
  for (const auto& e : edges) {
    json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["weight"] = e.weight;
    j["edges"].push_back(std::move(je));
  }
  std::vector<Certificate> certs(certificates.begin(), certificates.end());
  std::sort(certs.begin(), certs.end(),
            [](const Certificate& a, const Certificate& b) { return a.seq < b.seq; });
  j["certificates"] = json::array();
  for (const auto& cert : certs) {
    json jc;
    jc["sequence"] = inst.sequences.at(static_cast<std::size_t>(cert.seq)).id;
    jc["parts"] = json::array();
    for (const auto& part : cert.parts) {
      json jp;
      jp["a"] = part.seg.a;
      jp["b"] = part.seg.b;
      jp["criterion"] = inst.criteria.at(static_cast<std::size_t>(part.criterion)).id;
      jp["node"] = part.node;
      jc["parts"].push_back(std::move(jp));
    }
    j["certificates"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

DiagramFile diagram_from_json(const Instance& inst, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("diagram parse: ") + e.what());
  }
  std::map<std::string, int> crit_index;
  for (int c = 0; c < inst.num_criteria(); ++c)
    crit_index[inst.criteria[static_cast<std::size_t>(c)].id] = c;
  std::map<std::string, int> seq_index;
  for (int i = 0; i < inst.num_sequences(); ++i)
    seq_index[inst.sequences[static_cast<std::size_t>(i)].id] = i;

  try {
    DiagramFile file;
    for (const auto& jn : j.at("nodes")) {
      FdNode node;
      node.id = jn.at("id").get<int>();
      const auto kind = jn.at("kind").get<std::string>();
      if (kind == "s") {
        node.kind = NodeKind::source;
      } else if (kind == "t") {
        node.kind = NodeKind::sink;
      } else if (kind == "c") {
        node.kind = NodeKind::criterion;
        const auto label = jn.at("label").get<std::string>();
        const auto it = crit_index.find(label);
        if (it == crit_index.end())
          throw std::runtime_error("diagram references unknown criterion " + label);
        node.criterion = it->second;
      } else {
        throw std::runtime_error("unknown node kind: " + kind);
      }
      file.diagram.nodes.push_back(node);
    }
    std::sort(file.diagram.nodes.begin(), file.diagram.nodes.end(),
              [](const FdNode& a, const FdNode& b) { return a.id < b.id; });
    for (const auto& je : j.at("edges"))
      file.diagram.edges.push_back(
          {je.at("from").get<int>(), je.at("to").get<int>(), je.at("weight").get<long>()});
    for (const auto& jc : j.at("certificates")) {
      Certificate cert;
      const auto seq_id = jc.at("sequence").get<std::string>();
      const auto it = seq_index.find(seq_id);
      if (it == seq_index.end())
        throw std::runtime_error("certificate references unknown sequence " + seq_id);
      cert.seq = it->second;
      for (const auto& jp : jc.at("parts")) {
        CertificatePart part;
        part.seg.seq = cert.seq;
        part.seg.a = jp.at("a").get<int>();
        part.seg.b = jp.at("b").get<int>();
        const auto label = jp.at("criterion").get<std::string>();
        const auto cit = crit_index.find(label);
        if (cit == crit_index.end())
          throw std::runtime_error("certificate references unknown criterion " + label);
        part.criterion = cit->second;
        part.node = jp.at("node").get<int>();
        cert.parts.push_back(part);
      }
      file.certificates.push_back(std::move(cert));
    }
    return file;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("diagram schema: ") + e.what());
  }
}

std::string to_dot(const Instance& inst, const FlowDiagram& fd, const DotOptions& options) {
  std::vector<DotNode> nodes;
  for (const auto& node : fd.nodes) {
    DotNode dn;
    dn.id = node.id;
    if (node.kind == NodeKind::source) {
      dn.kind = 's';
      dn.label = "s";
    } else if (node.kind == NodeKind::sink) {
      dn.kind = 't';
      dn.label = "t";
    } else {
      dn.kind = 'c';
      dn.label = inst.criteria.at(static_cast<std::size_t>(node.criterion)).id;
    }
    nodes.push_back(std::move(dn));
  }
  return render_dot(std::move(nodes), fd.edges, options);
}

std::string dot_from_diagram_json(const std::string& text, const DotOptions& options) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("diagram parse: ") + e.what());
  }
  try {
    std::vector<DotNode> nodes;
    for (const auto& jn : j.at("nodes")) {
      DotNode dn;
      dn.id = jn.at("id").get<int>();
      const auto kind = jn.at("kind").get<std::string>();
      if (kind != "s" && kind != "t" && kind != "c")
        throw std::runtime_error("unknown node kind: " + kind);
      dn.kind = kind[0];
      dn.label = jn.at("label").get<std::string>();
      nodes.push_back(std::move(dn));
    }
    std::vector<FdEdge> edges;
    for (const auto& je : j.at("edges"))
      edges.push_back(
          {je.at("from").get<int>(), je.at("to").get<int>(), je.at("weight").get<long>()});
    return render_dot(std::move(nodes), std::move(edges), options);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("diagram schema: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace flowdiag
