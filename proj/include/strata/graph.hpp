#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strata {

inline constexpr double kDefaultNodeWidth = 60.0;
inline constexpr double kDefaultNodeHeight = 30.0;

enum class Direction { Right, Down };

enum class PortSide { North, East, South, West, Unassigned };

enum class PortOrigin { Explicit, Implicit };

// Whether reordering elements of a class in the source text would change the
// meaning of the model (fixed) or only the drawing (free).
enum class OrderSemantics { SemanticFixed, ConventionFree };

// Filled in by the ingestion frontends; the layout phases treat it as
// descriptive metadata and surface it in traces.
struct OrderClassification {
  std::map<std::string, OrderSemantics> node_kinds;
  OrderSemantics edges = OrderSemantics::ConventionFree;
  OrderSemantics ports = OrderSemantics::ConventionFree;
  std::map<std::string, int> group_rules;  // node kind -> ordering group

  bool operator==(const OrderClassification&) const = default;
};

struct Port {
  std::string id;
  std::string owner;  // node id
  PortSide side = PortSide::Unassigned;
  int model_order = 0;
  PortOrigin origin = PortOrigin::Explicit;

  bool operator==(const Port&) const = default;
};

// Keys a dummy node inherits from the edge it subdivides. source_model_order
// is the model order of the node that declared the edge (the pre-reversal
// source), so dummies of backward edges sort after their target's own edges.
struct DummyInfo {
  std::string edge_id;
  int edge_model_order = 0;
  int source_model_order = 0;

  bool operator==(const DummyInfo&) const = default;
};

struct Graph;

struct Node {
  std::string id;
  int model_order = 0;
  int group = 0;
  std::string kind = "node";
  bool fixed_port_order = false;
  double width = kDefaultNodeWidth;
  double height = kDefaultNodeHeight;
  std::vector<Port> ports;      // declaration order
  std::vector<Graph> children;  // empty, or exactly one child graph
  std::optional<DummyInfo> dummy;

  bool is_dummy() const { return dummy.has_value(); }
  bool has_children() const { return !children.empty(); }
  const Port* find_port(const std::string& port_id) const;

  bool operator==(const Node&) const = default;
};

struct Edge {
  std::string id;
  std::string source;
  std::string target;
  std::optional<std::string> source_port;
  std::optional<std::string> target_port;
  int model_order = 0;
  std::optional<int> local_index;  // declaration index under the source node
  std::optional<int> priority_label;
  bool reversed = false;

  bool is_self_loop() const { return source == target; }

  bool operator==(const Edge&) const = default;
};

struct Graph {
  std::vector<Node> nodes;  // list position == model order
  std::vector<Edge> edges;
  Direction direction = Direction::Right;
  OrderClassification classification;

  const Node* find_node(const std::string& id) const;
  Node* find_node(const std::string& id);
  const Edge* find_edge(const std::string& id) const;

  bool operator==(const Graph&) const = default;
};

// Equality that ignores the classification metadata; geometry fields are not
// part of Graph, so this is what the serialization round-trip preserves.
bool structurally_equal(const Graph& a, const Graph& b);

struct Violation {
  std::string code;     // stable identifier, e.g. "duplicate-node-id"
  std::string element;  // offending node/edge/port id ("" for graph-level)
  std::string message;
};

// Structural checks on an input graph. Pure; returns every violation found.
std::vector<Violation> validate(const Graph& graph);

// Map node id -> index into graph.nodes.
std::map<std::string, std::size_t> node_index(const Graph& graph);

// Assigns edge model orders by sorting (source node model order, local_index)
// lexicographically. Every edge must carry a local_index; a duplicate index
// under one source is rejected. The edge list is re-ordered to match.
Graph derive_global_edge_order(Graph graph);

// Adds one implicit port per edge endpoint that lacks a port reference; the
// port's model order is the incident edge's model order. Explicit ports and
// endpoints that already have ports are untouched. Idempotent.
Graph synthesize_implicit_ports(Graph graph);

}  // namespace strata
