#include "strata/graph.hpp"

#include <algorithm>
#include <set>

#include "strata/errors.hpp"

namespace strata {

const Port* Node::find_port(const std::string& port_id) const {
  for (const Port& p : ports)
    if (p.id == port_id) return &p;
  return nullptr;
}

const Node* Graph::find_node(const std::string& id) const {
  for (const Node& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

Node* Graph::find_node(const std::string& id) {
  for (Node& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

const Edge* Graph::find_edge(const std::string& id) const {
  for (const Edge& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

// Edge comparison for structural identity: local_index is a derivation
// intermediate and reversed is a layout artifact, so neither counts.
bool edge_structurally_equal(const Edge& a, const Edge& b) {
  return a.id == b.id && a.source == b.source && a.target == b.target &&
         a.source_port == b.source_port && a.target_port == b.target_port &&
         a.model_order == b.model_order && a.priority_label == b.priority_label;
}

}  // namespace

bool structurally_equal(const Graph& a, const Graph& b) {
  if (a.direction != b.direction) return false;
  if (a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (!edge_structurally_equal(a.edges[i], b.edges[i])) return false;
  if (a.nodes.size() != b.nodes.size()) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const Node& x = a.nodes[i];
    const Node& y = b.nodes[i];
    if (x.id != y.id || x.model_order != y.model_order || x.group != y.group ||
        x.kind != y.kind || x.fixed_port_order != y.fixed_port_order ||
        x.width != y.width || x.height != y.height || x.ports != y.ports ||
        x.dummy != y.dummy)
      return false;
    if (x.children.size() != y.children.size()) return false;
    for (std::size_t c = 0; c < x.children.size(); ++c)
      if (!structurally_equal(x.children[c], y.children[c])) return false;
  }
  return true;
}

std::map<std::string, std::size_t> node_index(const Graph& graph) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    index.emplace(graph.nodes[i].id, i);
  return index;
}

namespace {

void validate_level(const Graph& g, const std::string& prefix,
                    std::vector<Violation>& out) {
  auto report = [&](const std::string& code, const std::string& element,
                    const std::string& message) {
    out.push_back({code, prefix + element, message});
  };

  std::set<std::string> node_ids;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Node& n = g.nodes[i];
    if (!node_ids.insert(n.id).second)
      report("duplicate-node-id", n.id, "node id declared more than once");
    if (n.model_order != static_cast<int>(i))
      report("node-order-mismatch", n.id,
             "node model order " + std::to_string(n.model_order) +
                 " does not equal list position " + std::to_string(i));
    if (n.is_dummy())
      report("dummy-in-input", n.id, "dummy nodes are layout-internal");
    if (n.width < 0 || n.height < 0)
      report("invalid-size", n.id, "node size must be non-negative");
    if (n.group < 0)
      report("invalid-group", n.id, "ordering group must be non-negative");
    std::set<std::string> port_ids;
    for (const Port& p : n.ports) {
      if (!port_ids.insert(p.id).second)
        report("duplicate-port-id", n.id + "." + p.id,
               "port id declared more than once on node " + n.id);
      if (p.owner != n.id)
        report("port-owner-mismatch", n.id + "." + p.id,
               "port owner '" + p.owner + "' does not match node " + n.id);
    }
    if (n.children.size() > 1)
      report("multiple-child-graphs", n.id,
             "a compound node holds exactly one child graph");
    for (const Graph& child : n.children)
      validate_level(child, prefix + n.id + "/", out);
  }

  std::set<std::string> edge_ids;
  std::set<int> edge_orders;
  bool orders_clash = false;
  for (const Edge& e : g.edges) {
    if (!edge_ids.insert(e.id).second)
      report("duplicate-edge-id", e.id, "edge id declared more than once");
    if (!edge_orders.insert(e.model_order).second) orders_clash = true;
    if (e.reversed)
      report("reversed-in-input", e.id,
             "reversal flags are assigned by cycle breaking, not input");
    const Node* src = g.find_node(e.source);
    const Node* tgt = g.find_node(e.target);
    if (!src)
      report("dangling-endpoint", e.id,
             "edge source '" + e.source + "' is not a declared node");
    if (!tgt)
      report("dangling-endpoint", e.id,
             "edge target '" + e.target + "' is not a declared node");
    if (src && e.source_port && !src->find_port(*e.source_port))
      report("dangling-port", e.id,
             "source port '" + *e.source_port + "' is not on node " + e.source);
    if (tgt && e.target_port && !tgt->find_port(*e.target_port))
      report("dangling-port", e.id,
             "target port '" + *e.target_port + "' is not on node " + e.target);
  }
  if (!g.edges.empty()) {
    int max_order = 0;
    for (const Edge& e : g.edges) max_order = std::max(max_order, e.model_order);
    if (orders_clash || max_order != static_cast<int>(g.edges.size()) - 1 ||
        *edge_orders.begin() < 0)
      report("edge-order-not-dense", "",
             "edge model orders must be a dense permutation of 0..E-1");
  }
}

}  // namespace

std::vector<Violation> validate(const Graph& graph) {
  std::vector<Violation> out;
  validate_level(graph, "", out);
  return out;
}

Graph derive_global_edge_order(Graph graph) {
  auto index = node_index(graph);
  std::set<std::pair<std::string, int>> seen;
  for (const Edge& e : graph.edges) {
    if (!e.local_index)
      throw InputError("edge '" + e.id + "' carries no local declaration index");
    if (!index.count(e.source))
      throw InputError("edge '" + e.id + "' has unknown source '" + e.source + "'");
    if (!seen.emplace(e.source, *e.local_index).second)
      throw InputError("duplicate local index " + std::to_string(*e.local_index) +
                       " under node '" + e.source + "'");
  }
  std::stable_sort(graph.edges.begin(), graph.edges.end(),
                   [&](const Edge& a, const Edge& b) {
                     int sa = graph.nodes[index.at(a.source)].model_order;
                     int sb = graph.nodes[index.at(b.source)].model_order;
                     if (sa != sb) return sa < sb;
                     return *a.local_index < *b.local_index;
                   });
  for (std::size_t i = 0; i < graph.edges.size(); ++i)
    graph.edges[i].model_order = static_cast<int>(i);
  return graph;
}

Graph synthesize_implicit_ports(Graph graph) {
  auto index = node_index(graph);
  auto fresh_port_id = [&](const Node& n, const std::string& base) {
    std::string id = base;
    while (n.find_port(id)) id += "_";
    return id;
  };
  std::vector<std::size_t> by_order(graph.edges.size());
  for (std::size_t i = 0; i < by_order.size(); ++i) by_order[i] = i;
  std::sort(by_order.begin(), by_order.end(), [&](std::size_t a, std::size_t b) {
    return graph.edges[a].model_order < graph.edges[b].model_order;
  });
  for (std::size_t i : by_order) {
    Edge& e = graph.edges[i];
    if (!e.source_port) {
      Node& n = graph.nodes.at(index.at(e.source));
      Port p{fresh_port_id(n, "$" + e.id + ":s"), n.id, PortSide::Unassigned,
             e.model_order, PortOrigin::Implicit};
      n.ports.push_back(p);
      e.source_port = p.id;
    }
    if (!e.target_port) {
      Node& n = graph.nodes.at(index.at(e.target));
      Port p{fresh_port_id(n, "$" + e.id + ":t"), n.id, PortSide::Unassigned,
             e.model_order, PortOrigin::Implicit};
      n.ports.push_back(p);
      e.target_port = p.id;
    }
  }
  return graph;
}

}  // namespace strata
