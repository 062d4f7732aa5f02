#include <string>
#include <vector>

#include "doctest.h"
#include "strata/errors.hpp"
#include "strata/json_io.hpp"

using namespace strata;

TEST_CASE("minimal graph gets defaults from list positions") {
  Graph g = parse_json_graph(
      R"({"nodes":[{"id":"A"},{"id":"B"}],"edges":[{"source":"A","target":"B"}]})");
  REQUIRE(g.nodes.size() == 2);
  CHECK(g.nodes[0].model_order == 0);
  CHECK(g.nodes[1].model_order == 1);
  CHECK(g.nodes[0].width == kDefaultNodeWidth);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].model_order == 0);
  CHECK(g.edges[0].id == "e0");
  CHECK(g.direction == Direction::Right);
}

TEST_CASE("groups and explicit orders are preserved") {
  Graph g = parse_json_graph(R"({
    "nodes":[{"id":"A","group":1},{"id":"B","group":0}],
    "edges":[{"source":"A","target":"B","order":1},{"source":"B","target":"A","order":0}]
  })");
  CHECK(g.nodes[0].group == 1);
  CHECK(g.nodes[1].group == 0);
  CHECK(g.edges[0].model_order == 1);
  CHECK(g.edges[1].model_order == 0);
}

TEST_CASE("sparse edge orders are renumbered densely keeping relative order") {
  Graph g = parse_json_graph(R"({
    "nodes":[{"id":"A"},{"id":"B"}],
    "edges":[{"source":"A","target":"B","order":10},{"source":"B","target":"A","order":3}]
  })");
  CHECK(g.edges[0].model_order == 1);
  CHECK(g.edges[1].model_order == 0);
}

TEST_CASE("explicit ports parse with sides and orders") {
  Graph g = parse_json_graph(R"({
    "nodes":[{"id":"A","fixedPortOrder":true,"ports":[
      {"id":"x","side":"east"},{"id":"y","side":"east","order":5}]},
     {"id":"B"}],
    "edges":[{"source":"A","target":"B","sourcePort":"x"}]
  })");
  const Node* a = g.find_node("A");
  REQUIRE(a != nullptr);
  CHECK(a->fixed_port_order);
  REQUIRE(a->ports.size() == 2);
  CHECK(a->ports[0].side == PortSide::East);
  CHECK(a->ports[0].model_order == 0);
  CHECK(a->ports[1].model_order == 5);
  CHECK(a->ports[0].origin == PortOrigin::Explicit);
}

TEST_CASE("unknown fields are rejected in strict mode and warned otherwise") {
  std::string text =
      R"({"nodes":[{"id":"A","zap":1}],"edges":[]})";
  CHECK_THROWS_AS(parse_json_graph(text, true), SchemaError);

  std::vector<std::string> warnings;
  Graph g = parse_json_graph(text, false, &warnings);
  CHECK(g.nodes.size() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("zap") != std::string::npos);
}

TEST_CASE("geometry fields from emitted layouts are ignored on parse") {
  Graph g = parse_json_graph(R"({
    "canvas":{"width":100,"height":50},
    "nodes":[{"id":"A","x":5,"y":6},{"id":"B"}],
    "edges":[{"source":"A","target":"B","reversed":true,"bendPoints":[{"x":1,"y":2}]}]
  })");
  CHECK(g.edges[0].reversed == false);
}

TEST_CASE("schema errors carry a path") {
  try {
    parse_json_graph(R"({"nodes":[{"id":"A"},{"no_id":true}],"edges":[]})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& err) {
    CHECK(err.path == "$.nodes[1]");
  }
}

TEST_CASE("structural validation failures propagate") {
  CHECK_THROWS_AS(parse_json_graph(
                      R"({"nodes":[{"id":"A"}],"edges":[{"source":"A","target":"Z"}]})"),
                  InputError);
}

TEST_CASE("children objects become nested graphs") {
  Graph g = parse_json_graph(R"({
    "nodes":[{"id":"P","children":{
      "nodes":[{"id":"c1"},{"id":"c2"}],
      "edges":[{"source":"c1","target":"c2"}]}}],
    "edges":[]
  })");
  REQUIRE(g.nodes.size() == 1);
  REQUIRE(g.nodes[0].has_children());
  CHECK(g.nodes[0].children[0].nodes.size() == 2);
  CHECK(g.nodes[0].children[0].edges.size() == 1);
}

TEST_CASE("invalid direction and side values are schema errors") {
  CHECK_THROWS_AS(parse_json_graph(R"({"direction":"up","nodes":[],"edges":[]})"),
                  SchemaError);
  CHECK_THROWS_AS(
      parse_json_graph(
          R"({"nodes":[{"id":"A","ports":[{"id":"p","side":"middle"}]}],"edges":[]})"),
      SchemaError);
}

TEST_CASE("emit then parse reproduces the graph structurally") {
  Graph g = parse_json_graph(R"({
    "direction":"down",
    "nodes":[
      {"id":"A","group":1,"kind":"task","ports":[{"id":"out","side":"south"}]},
      {"id":"B","width":80,"height":40},
      {"id":"P","fixedPortOrder":true,"children":{
        "nodes":[{"id":"c"}],"edges":[]}}],
    "edges":[
      {"id":"ab","source":"A","target":"B","sourcePort":"out","priority":2},
      {"id":"ba","source":"B","target":"A"}]
  })");
  Graph back = parse_json_graph(emit_graph_json(g));
  CHECK(structurally_equal(g, back));
}
