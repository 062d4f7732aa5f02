#include "strata/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strata {

namespace {

double flow_extent(const Node& n, Direction d) {
  return d == Direction::Right ? n.width : n.height;
}
double cross_extent(const Node& n, Direction d) {
  return d == Direction::Right ? n.height : n.width;
}

// Fraction along a side for the i-th of n ports: ports spread evenly, never
// touching the corners.
double spread(std::size_t i, std::size_t n) {
  return static_cast<double>(i + 1) / static_cast<double>(n + 1);
}

void anchor_side(PlacedNode& placed, const Rect& r,
                 const std::vector<std::string>& ports, PortSide side) {
  for (std::size_t i = 0; i < ports.size(); ++i) {
    double f = spread(i, ports.size());
    Point at;
    switch (side) {
      case PortSide::North: at = {r.x + f * r.width, r.y}; break;
      case PortSide::South: at = {r.x + f * r.width, r.y + r.height}; break;
      case PortSide::West: at = {r.x, r.y + f * r.height}; break;
      case PortSide::East: at = {r.x + r.width, r.y + f * r.height}; break;
      case PortSide::Unassigned: at = r.center(); break;
    }
    placed.ports[ports[i]] = PortAnchor{at, side};
  }
}

}  // namespace

CanvasLayout place_nodes(const Graph& graph, const Layering& layering,
                         const LayerOrders& orders, const Spacing& spacing) {
  Direction dir = graph.direction;
  CanvasLayout out;

  bool entry_connector = false;
  if (!orders.layers.empty())
    for (const std::string& id : orders.layers.front())
      if (graph.find_node(id)->kind == "initial") entry_connector = true;

  // Layer extents along the flow axis.
  std::vector<double> extent(orders.layers.size(), 0.0);
  for (std::size_t i = 0; i < orders.layers.size(); ++i)
    for (const std::string& id : orders.layers[i])
      extent[i] = std::max(extent[i], flow_extent(*graph.find_node(id), dir));

  std::vector<double> flow_origin(orders.layers.size(), 0.0);
  double flow = spacing.margin + (entry_connector ? kConnectorSpace : 0.0);
  for (std::size_t i = 0; i < orders.layers.size(); ++i) {
    flow_origin[i] = flow;
    flow += extent[i] + spacing.layer;
  }

  // Sequential cross-axis packing.
  std::vector<std::vector<double>> cross(orders.layers.size());
  for (std::size_t i = 0; i < orders.layers.size(); ++i) {
    double cursor = spacing.margin;
    for (const std::string& id : orders.layers[i]) {
      cross[i].push_back(cursor);
      cursor += cross_extent(*graph.find_node(id), dir) + spacing.node;
    }
  }

  // One alignment pass: pull each element toward the mean center of its
  // already-aligned previous-layer neighbors, clamped to keep order and the
  // minimum gap.
  auto center_of = [&](std::size_t layer, std::size_t k) {
    const Node& n = *graph.find_node(orders.layers[layer][k]);
    return cross[layer][k] + cross_extent(n, dir) / 2;
  };
  for (std::size_t i = 1; i < orders.layers.size(); ++i) {
    std::map<std::string, std::size_t> prev_at;
    for (std::size_t k = 0; k < orders.layers[i - 1].size(); ++k)
      prev_at[orders.layers[i - 1][k]] = k;
    double floor = spacing.margin;
    for (std::size_t k = 0; k < orders.layers[i].size(); ++k) {
      const std::string& id = orders.layers[i][k];
      const Node& n = *graph.find_node(id);
      double sum = 0;
      int count = 0;
      for (const Edge& e : graph.edges) {
        if (e.is_self_loop()) continue;
        const std::string* other = nullptr;
        if (e.target == id) other = &e.source;
        if (e.source == id) other = &e.target;
        if (!other) continue;
        auto it = prev_at.find(*other);
        if (it == prev_at.end()) continue;
        sum += center_of(i - 1, it->second);
        ++count;
      }
      double half = cross_extent(n, dir) / 2;
      double desired =
          count == 0 ? cross[i][k] : sum / count - half;
      cross[i][k] = std::max(desired, floor);
      floor = cross[i][k] + cross_extent(n, dir) + spacing.node;
    }
  }

  for (std::size_t i = 0; i < orders.layers.size(); ++i) {
    for (std::size_t k = 0; k < orders.layers[i].size(); ++k) {
      const std::string& id = orders.layers[i][k];
      const Node& n = *graph.find_node(id);
      Rect r;
      if (dir == Direction::Right) {
        r = {flow_origin[i] + (extent[i] - n.width) / 2, cross[i][k], n.width,
             n.height};
      } else {
        r = {cross[i][k], flow_origin[i] + (extent[i] - n.height) / 2, n.width,
             n.height};
      }
      PlacedNode placed;
      placed.rect = r;
      placed.layer = static_cast<int>(i);
      placed.dummy = n.is_dummy();
      placed.kind = n.kind;

      auto po = orders.ports.find(id);
      if (po != orders.ports.end()) {
        anchor_side(placed, r, po->second.north, PortSide::North);
        anchor_side(placed, r, po->second.east, PortSide::East);
        anchor_side(placed, r, po->second.south, PortSide::South);
        anchor_side(placed, r, po->second.west, PortSide::West);
      }
      out.nodes[id] = std::move(placed);
    }
  }

  for (const Node& n : graph.nodes)
    if (!n.is_dummy()) out.node_order.push_back(n.id);

  for (const auto& [id, placed] : out.nodes) {
    if (placed.dummy) continue;
    out.width = std::max(out.width, placed.rect.x + placed.rect.width);
    out.height = std::max(out.height, placed.rect.y + placed.rect.height);
  }
  out.width += spacing.margin;
  out.height += spacing.margin;
  return out;
}

namespace {

Point anchor_or_center(const CanvasLayout& layout, const std::string& node,
                       const std::optional<std::string>& port) {
  const PlacedNode& placed = layout.nodes.at(node);
  if (port) {
    auto it = placed.ports.find(*port);
    if (it != placed.ports.end()) return it->second.at;
  }
  return placed.rect.center();
}

std::vector<Point> self_loop_points(const CanvasLayout& layout, const Edge& e,
                                    Direction dir, const Spacing& spacing) {
  Point a = anchor_or_center(layout, e.source, e.source_port);
  Point b = anchor_or_center(layout, e.target, e.target_port);
  double lift = spacing.node * 0.6;
  if (dir == Direction::Right) {  // free side: South
    double y = std::max(a.y, b.y) + lift;
    return {a, {a.x, y}, {b.x, y}, b};
  }
  double x = std::max(a.x, b.x) + lift;  // free side: East
  return {a, {x, a.y}, {x, b.y}, b};
}

}  // namespace

void route_edges(const Graph& fused, CanvasLayout& layout,
                 const std::map<std::string, std::vector<std::string>>& dummy_chain,
                 const Spacing& spacing) {
  std::vector<const Edge*> ordered;
  for (const Edge& e : fused.edges) ordered.push_back(&e);
  std::sort(ordered.begin(), ordered.end(), [](const Edge* a, const Edge* b) {
    return a->model_order < b->model_order;
  });

  for (const Edge* e : ordered) {
    RoutedEdge route;
    route.id = e->id;
    route.reversed = e->reversed;
    route.priority_label = e->priority_label;

    if (e->is_self_loop()) {
      route.points = self_loop_points(layout, *e, fused.direction, spacing);
    } else {
      std::vector<Point> mids;
      auto chain = dummy_chain.find(e->id);
      if (chain != dummy_chain.end())
        for (const std::string& d : chain->second)
          mids.push_back(layout.nodes.at(d).rect.center());
      // Chains run in flow orientation; a reversed edge traverses its own
      // chain backwards so the polyline runs declared source to target.
      if (e->reversed) std::reverse(mids.begin(), mids.end());
      route.points.push_back(anchor_or_center(layout, e->source, e->source_port));
      route.points.insert(route.points.end(), mids.begin(), mids.end());
      route.points.push_back(anchor_or_center(layout, e->target, e->target_port));
    }
    route.label_at = {route.points.front().x + 4, route.points.front().y - 4};

    for (const Point& p : route.points) {
      layout.width = std::max(layout.width, p.x + spacing.margin);
      layout.height = std::max(layout.height, p.y + spacing.margin);
    }
    layout.edges.push_back(std::move(route));
  }
}

namespace {

void collect_centers(const CanvasLayout& layout, const std::string& prefix,
                     Point offset, std::map<std::string, Point>& out) {
  for (const auto& [id, placed] : layout.nodes) {
    if (placed.dummy) continue;
    Point c = placed.rect.center();
    out[prefix + id] = {offset.x + c.x, offset.y + c.y};
    auto child = layout.children.find(id);
    if (child != layout.children.end()) {
      Point child_origin = {offset.x + placed.rect.x + kCompoundPad,
                            offset.y + placed.rect.y + kCompoundHeader};
      collect_centers(child->second, prefix + id + "/", child_origin, out);
    }
  }
}

}  // namespace

std::map<std::string, Point> absolute_centers(const CanvasLayout& layout) {
  std::map<std::string, Point> out;
  collect_centers(layout, "", {0, 0}, out);
  return out;
}

}  // namespace strata
