#include "strata/json_io.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "strata/errors.hpp"

namespace strata {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct FieldCheck {
  bool strict;
  std::vector<std::string>* warnings;

  void check(const json& obj, const std::string& path,
             const std::set<std::string>& known,
             const std::set<std::string>& ignored) const {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (known.count(it.key()) || ignored.count(it.key())) continue;
      std::string message = "unknown field '" + it.key() + "'";
      if (strict) throw SchemaError(path, message);
      if (warnings) warnings->push_back(path + ": " + message);
    }
  }
};

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path, std::string("missing '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const std::string& path,
                           const char* key) {
  const json& v = require(obj, path, key);
  if (!v.is_string()) throw SchemaError(path, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

PortSide parse_side(const std::string& s, const std::string& path) {
  if (s == "north") return PortSide::North;
  if (s == "east") return PortSide::East;
  if (s == "south") return PortSide::South;
  if (s == "west") return PortSide::West;
  throw SchemaError(path, "invalid side '" + s + "'");
}

const char* side_name(PortSide s) {
  switch (s) {
    case PortSide::North: return "north";
    case PortSide::East: return "east";
    case PortSide::South: return "south";
    case PortSide::West: return "west";
    case PortSide::Unassigned: return "";
  }
  return "";
}

Port parse_port(const json& j, const std::string& owner, const std::string& path,
                std::size_t position, const FieldCheck& fields) {
  if (!j.is_object()) throw SchemaError(path, "port must be an object");
  fields.check(j, path, {"id", "side", "order", "origin"}, {"anchor"});
  Port p;
  p.id = require_string(j, path, "id");
  p.owner = owner;
  if (j.contains("side")) p.side = parse_side(j["side"].get<std::string>(), path);
  p.model_order =
      j.contains("order") ? j["order"].get<int>() : static_cast<int>(position);
  if (j.contains("origin")) {
    std::string o = j["origin"].get<std::string>();
    if (o == "implicit")
      p.origin = PortOrigin::Implicit;
    else if (o == "explicit")
      p.origin = PortOrigin::Explicit;
    else
      throw SchemaError(path, "invalid origin '" + o + "'");
  }
  return p;
}

Graph parse_level(const json& j, const std::string& path, const FieldCheck& fields,
                  bool top_level);

Node parse_node(const json& j, const std::string& path, const FieldCheck& fields,
                std::size_t position) {
  if (!j.is_object()) throw SchemaError(path, "node must be an object");
  fields.check(j, path,
               {"id", "group", "kind", "width", "height", "fixedPortOrder",
                "ports", "children"},
               {"x", "y"});
  Node n;
  n.id = require_string(j, path, "id");
  n.model_order = static_cast<int>(position);
  if (j.contains("group")) n.group = j["group"].get<int>();
  if (j.contains("kind")) n.kind = j["kind"].get<std::string>();
  if (j.contains("width")) n.width = j["width"].get<double>();
  if (j.contains("height")) n.height = j["height"].get<double>();
  if (j.contains("fixedPortOrder")) n.fixed_port_order = j["fixedPortOrder"].get<bool>();
  if (j.contains("ports")) {
    const json& ports = j["ports"];
    if (!ports.is_array()) throw SchemaError(path, "'ports' must be an array");
    for (std::size_t i = 0; i < ports.size(); ++i)
      n.ports.push_back(parse_port(ports[i], n.id,
                                   path + ".ports[" + std::to_string(i) + "]", i,
                                   fields));
  }
  if (j.contains("children"))
    n.children.push_back(
        parse_level(j["children"], path + ".children", fields, false));
  return n;
}

Edge parse_edge(const json& j, const std::string& path, const FieldCheck& fields,
                std::size_t position) {
  if (!j.is_object()) throw SchemaError(path, "edge must be an object");
  fields.check(j, path,
               {"id", "source", "target", "sourcePort", "targetPort", "order",
                "priority"},
               {"bendPoints", "reversed"});
  Edge e;
  e.source = require_string(j, path, "source");
  e.target = require_string(j, path, "target");
  e.id = j.contains("id") ? j["id"].get<std::string>()
                          : "e" + std::to_string(position);
  if (j.contains("sourcePort")) e.source_port = j["sourcePort"].get<std::string>();
  if (j.contains("targetPort")) e.target_port = j["targetPort"].get<std::string>();
  e.model_order =
      j.contains("order") ? j["order"].get<int>() : static_cast<int>(position);
  if (j.contains("priority")) e.priority_label = j["priority"].get<int>();
  return e;
}

Graph parse_level(const json& j, const std::string& path, const FieldCheck& fields,
                  bool top_level) {
  if (!j.is_object()) throw SchemaError(path, "graph must be an object");
  std::set<std::string> known = {"nodes", "edges"};
  if (top_level) known.insert("direction");
  fields.check(j, path, known, {"canvas"});

  Graph g;
  if (top_level && j.contains("direction")) {
    std::string d = j["direction"].get<std::string>();
    if (d == "right")
      g.direction = Direction::Right;
    else if (d == "down")
      g.direction = Direction::Down;
    else
      throw SchemaError(path, "invalid direction '" + d + "'");
  }
  if (j.contains("nodes")) {
    const json& nodes = j["nodes"];
    if (!nodes.is_array()) throw SchemaError(path, "'nodes' must be an array");
    for (std::size_t i = 0; i < nodes.size(); ++i)
      g.nodes.push_back(
          parse_node(nodes[i], path + ".nodes[" + std::to_string(i) + "]", fields, i));
  }
  if (j.contains("edges")) {
    const json& edges = j["edges"];
    if (!edges.is_array()) throw SchemaError(path, "'edges' must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i)
      g.edges.push_back(
          parse_edge(edges[i], path + ".edges[" + std::to_string(i) + "]", fields, i));
  }

  // Renumber edge orders densely, preserving the given relative order (ties
  // by list position via stable sort).
  std::vector<std::size_t> by_order(g.edges.size());
  for (std::size_t i = 0; i < by_order.size(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return g.edges[a].model_order < g.edges[b].model_order;
                   });
  for (std::size_t rank = 0; rank < by_order.size(); ++rank)
    g.edges[by_order[rank]].model_order = static_cast<int>(rank);
  return g;
}

}  // namespace

Graph parse_json_graph(const std::string& text, bool strict,
                       std::vector<std::string>* warnings) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw SchemaError("$", err.what());
  }
  FieldCheck fields{strict, warnings};
  Graph g = parse_level(j, "$", fields, true);
  g.classification.edges = OrderSemantics::SemanticFixed;
  g.classification.ports = OrderSemantics::ConventionFree;

  auto violations = validate(g);
  if (!violations.empty()) {
    std::string msg;
    for (const Violation& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += v.code + " (" + v.element + "): " + v.message;
    }
    throw InputError(msg);
  }
  return g;
}

namespace {

ordered_json point_json(const Point& p) {
  return ordered_json{{"x", p.x}, {"y", p.y}};
}

ordered_json level_json(const Graph& graph, const CanvasLayout* layout,
                        bool top_level) {
  ordered_json j;
  if (top_level) j["direction"] = graph.direction == Direction::Right ? "right" : "down";
  if (layout)
    j["canvas"] = ordered_json{{"width", layout->width}, {"height", layout->height}};

  j["nodes"] = ordered_json::array();
  for (const Node& n : graph.nodes) {
    if (n.is_dummy()) continue;
    ordered_json nj;
    nj["id"] = n.id;
    if (n.kind != "node") nj["kind"] = n.kind;
    if (n.group != 0) nj["group"] = n.group;
    if (n.fixed_port_order) nj["fixedPortOrder"] = true;
    const PlacedNode* placed = nullptr;
    if (layout) {
      auto it = layout->nodes.find(n.id);
      if (it != layout->nodes.end()) placed = &it->second;
    }
    if (placed) {
      nj["x"] = placed->rect.x;
      nj["y"] = placed->rect.y;
      nj["width"] = placed->rect.width;
      nj["height"] = placed->rect.height;
    } else {
      nj["width"] = n.width;
      nj["height"] = n.height;
    }
    if (!n.ports.empty()) {
      nj["ports"] = ordered_json::array();
      for (const Port& p : n.ports) {
        ordered_json pj;
        pj["id"] = p.id;
        if (p.side != PortSide::Unassigned) pj["side"] = side_name(p.side);
        pj["order"] = p.model_order;
        if (p.origin == PortOrigin::Implicit) pj["origin"] = "implicit";
        if (placed) {
          auto it = placed->ports.find(p.id);
          if (it != placed->ports.end()) pj["anchor"] = point_json(it->second.at);
        }
        nj["ports"].push_back(std::move(pj));
      }
    }
    if (n.has_children()) {
      const CanvasLayout* child = nullptr;
      if (layout) {
        auto it = layout->children.find(n.id);
        if (it != layout->children.end()) child = &it->second;
      }
      nj["children"] = level_json(n.children.front(), child, false);
    }
    j["nodes"].push_back(std::move(nj));
  }

  j["edges"] = ordered_json::array();
  std::map<std::string, const RoutedEdge*> routes;
  if (layout)
    for (const RoutedEdge& r : layout->edges) routes[r.id] = &r;
  for (const Edge& e : graph.edges) {
    ordered_json ej;
    ej["id"] = e.id;
    ej["source"] = e.source;
    ej["target"] = e.target;
    if (e.source_port) ej["sourcePort"] = *e.source_port;
    if (e.target_port) ej["targetPort"] = *e.target_port;
    ej["order"] = e.model_order;
    if (e.priority_label) ej["priority"] = *e.priority_label;
    if (e.reversed) ej["reversed"] = true;
    auto r = routes.find(e.id);
    if (r != routes.end() && r->second->points.size() > 2) {
      ej["bendPoints"] = ordered_json::array();
      for (std::size_t i = 1; i + 1 < r->second->points.size(); ++i)
        ej["bendPoints"].push_back(point_json(r->second->points[i]));
    }
    j["edges"].push_back(std::move(ej));
  }
  return j;
}

}  // namespace

std::string emit_graph_json(const Graph& graph) {
  return level_json(graph, nullptr, true).dump(2) + "\n";
}

std::string emit_layout_json(const Graph& graph, const CanvasLayout& layout) {
  return level_json(graph, &layout, true).dump(2) + "\n";
}

}  // namespace strata
