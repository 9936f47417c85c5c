#include <doctest.h>

#include <cstdio>
#include <stdexcept>
#include <string>

#include "flowdiag/datagen.hpp"
#include "flowdiag/dataset.hpp"
#include "flowdiag/exact.hpp"
#include "flowdiag/frontier.hpp"
#include "flowdiag/io.hpp"
#include "flowdiag/validate.hpp"
#include "testutil.hpp"

using namespace flowdiag;

TEST_CASE("datasets survive a json round trip byte for byte") {
  const Dataset d = generate_dataset(2, 3, 5, 9);
  const std::string text = dataset_to_json(d);
  const Dataset back = dataset_from_json(text);
  CHECK(back == d);
  CHECK(dataset_to_json(back) == text);
}

TEST_CASE("every criterion kind serializes with its parameters") {
  Dataset d;
  StateSequence seq;
  seq.id = "tau";
  State s0, s1;
  s0.labels = {"L", "f(0,0,0)"};
  s0.x = 0.0;
  s0.y = 1.5;
  s0.t = 0.0;
  s0.event = "pass";
  s1.labels = {"L"};
  s1.x = 0.5;
  s1.y = -1.0;
  s1.t = 1.0;
  s1.event = "shot-goal";
  seq.states = {s0, s1};
  d.sequences.push_back(seq);

  CriterionSpec label;
  label.id = "L";
  label.name = "tag L";
  label.kind = "label";
  label.tag = "L";
  CriterionSpec form;
  form.id = "f(0,0,0)";
  form.name = "flat line";
  form.kind = "formation";
  form.triple = {0, 0, 0};
  CriterionSpec ball;
  ball.id = "SG";
  ball.name = "shot goal";
  ball.kind = "ball";
  ball.which = "SG";
  CriterionSpec table;
  table.id = "win";
  table.name = "window";
  table.kind = "table";
  table.intervals = {{"tau", {{0, 2}}}};
  table.flags.monotone_decreasing = true;
  d.criteria = {label, form, ball, table};
  for (auto& spec : d.criteria) spec.flags = canonical_flags(spec);

  const std::string text = dataset_to_json(d);
  const Dataset back = dataset_from_json(text);
  CHECK(back == d);
  CHECK(dataset_to_json(back) == text);

  const auto inst = make_instance(d);
  CHECK(fulfils_single(inst, 0, {0, 0, 2}));       // both states carry L
  CHECK(fulfils_single(inst, 1, {0, 0, 1}));       // only the first is flat
  CHECK_FALSE(fulfils_single(inst, 1, {0, 0, 2}));
  CHECK(fulfils_single(inst, 2, {0, 0, 2}));       // the lone transition is a goal
  CHECK(fulfils_single(inst, 3, {0, 0, 2}));       // inside the listed window

  CriterionSpec bogus = label;
  bogus.kind = "mystery";
  Dataset broken;
  broken.criteria.push_back(bogus);
  CHECK(testutil::thrown_what([&] { dataset_to_json(broken); }) ==
        "unknown criterion kind: mystery");
}

TEST_CASE("malformed input is rejected with a location hint") {
  CHECK(testutil::thrown_what([] { dataset_from_json("{"); }).rfind("dataset parse", 0) == 0);
  CHECK(testutil::thrown_what([] { dataset_from_json("{}"); }).rfind("dataset schema", 0) == 0);
  const auto inst = testutil::char_instance({"ab"}, "ab");
  CHECK(testutil::thrown_what([&] { diagram_from_json(inst, "{"); }).rfind("diagram parse", 0) ==
        0);
  CHECK(testutil::thrown_what([&] { diagram_from_json(inst, "{}"); }).rfind("diagram schema", 0) ==
        0);
}

TEST_CASE("diagrams survive a json round trip byte for byte") {
  const auto inst = make_instance(generate_dataset(2, 4, 5, 5));
  const auto res = solve_exact(inst);
  REQUIRE(res.solved());
  const std::string text = diagram_to_json(inst, res.solution->diagram, res.solution->certificates);
  const DiagramFile back = diagram_from_json(inst, text);
  CHECK(back.diagram == res.solution->diagram);
  CHECK(back.certificates == res.solution->certificates);
  CHECK(validate(inst, back.diagram, back.certificates).valid);
  CHECK(diagram_to_json(inst, back.diagram, back.certificates) == text);
}

TEST_CASE("diagram files must reference known ids") {
  const auto inst = testutil::char_instance({"ab"}, "ab");
  CHECK(testutil::thrown_what([&] {
          diagram_from_json(
              inst,
              R"({"certificates":[],"edges":[],"nodes":[{"id":0,"kind":"c","label":"zz","name":"?"}]})");
        }) == "diagram references unknown criterion zz");
  CHECK(testutil::thrown_what([&] {
          diagram_from_json(
              inst, R"({"certificates":[{"parts":[],"sequence":"nope"}],"edges":[],"nodes":[]})");
        }) == "certificate references unknown sequence nope");
}

TEST_CASE("dot output is deterministic and sorted") {
  const auto inst = testutil::char_instance({"ab"}, "ab");
  FlowDiagram fd;
  fd.nodes = {{0, NodeKind::source, -1},
              {1, NodeKind::criterion, 0},
              {2, NodeKind::criterion, 1},
              {3, NodeKind::sink, -1}};
  fd.edges = {{2, 3, 1}, {0, 1, 1}, {1, 2, 1}};  // deliberately shuffled

  const std::string expected =
      "digraph flow_diagram {\n"
      "  rankdir=LR;\n"
      "  node [shape=box, style=filled, fillcolor=white];\n"
      "  n0 [label=\"s\", shape=circle];\n"
      "  n1 [label=\"a\"];\n"
      "  n2 [label=\"b\"];\n"
      "  n3 [label=\"t\", shape=doublecircle];\n"
      "  n0 -> n1 [label=\"1\"];\n"
      "  n1 -> n2 [label=\"1\"];\n"
      "  n2 -> n3 [label=\"1\"];\n"
      "}\n";
  CHECK(to_dot(inst, fd) == expected);

  DotOptions opts;
  opts.significant = {"b"};
  CHECK(to_dot(inst, fd, opts).find("n2 [label=\"b\", fillcolor=lightgrey];") !=
        std::string::npos);
}

TEST_CASE("dot rendering from json matches rendering from memory") {
  const auto inst = make_instance(generate_dataset(3, 6, 5, 7));
  const auto res = solve_frontier_independent(inst);
  REQUIRE(res.solved());
  const std::string text = diagram_to_json(inst, res.solution->diagram, res.solution->certificates);
  CHECK(dot_from_diagram_json(text) == to_dot(inst, res.solution->diagram));
}

TEST_CASE("dot labels escape quotes and backslashes") {
  const std::string text =
      R"({"edges":[],"nodes":[{"id":0,"kind":"s","label":"s","name":"source"},)"
      R"({"id":1,"kind":"c","label":"q\"\\","name":"odd"},)"
      R"({"id":2,"kind":"t","label":"t","name":"sink"}]})";
  CHECK(dot_from_diagram_json(text).find("n1 [label=\"q\\\"\\\\\"];") != std::string::npos);
}

TEST_CASE("file helpers round trip and report failures by path") {
  const std::string path = "io_scratch.txt";
  const std::string content = "line one\nline two\n\ttabbed\n";
  write_file(path, content);
  CHECK(read_file(path) == content);
  std::remove(path.c_str());

  CHECK(testutil::thrown_what([] { read_file("definitely_missing_file.json"); }) ==
        "cannot open definitely_missing_file.json");
  CHECK(testutil::thrown_what([] { write_file("no/such/dir/file.txt", "x"); }) ==
        "cannot open no/such/dir/file.txt for writing");
}
