#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/crossing_min.hpp"
#include "strata/graph.hpp"
#include "strata/layering.hpp"

namespace strata {

// Abstract-unit spacing between nodes in a layer, between layers, and around
// the drawing.
struct Spacing {
  double node = 20.0;
  double layer = 40.0;
  double margin = 10.0;

  bool operator==(const Spacing&) const = default;
};

// Inset of a child canvas inside its compound node, and the header strip that
// keeps the compound's own label visible above the child drawing.
inline constexpr double kCompoundPad = 6.0;
inline constexpr double kCompoundHeader = 20.0;
// Room reserved before the first layer for the entry connector drawn at
// initial-state nodes.
inline constexpr double kConnectorSpace = 22.0;

struct Point {
  double x = 0;
  double y = 0;

  bool operator==(const Point&) const = default;
};

struct Rect {
  double x = 0;
  double y = 0;
  double width = 0;
  double height = 0;

  Point center() const { return {x + width / 2, y + height / 2}; }

  bool operator==(const Rect&) const = default;
};

struct PortAnchor {
  Point at;  // absolute within the owning canvas
  PortSide side = PortSide::Unassigned;

  bool operator==(const PortAnchor&) const = default;
};

struct PlacedNode {
  Rect rect;  // within the owning canvas
  int layer = 0;
  bool dummy = false;
  std::string kind = "node";
  std::map<std::string, PortAnchor> ports;
};

struct RoutedEdge {
  std::string id;
  // Polyline in the declared direction of the edge: reversed edges are
  // emitted target-to-source relative to the layout flow, arrowhead at the
  // declared target.
  std::vector<Point> points;
  bool reversed = false;
  std::optional<int> priority_label;
  Point label_at;  // near the declared source anchor; meaningful when labeled
};

// One laid-out hierarchy level. Child canvases are stored per compound node
// id; their coordinates are local, offset inside the parent node rect by
// kCompoundPad horizontally and kCompoundHeader vertically.
struct CanvasLayout {
  std::map<std::string, PlacedNode> nodes;
  std::vector<std::string> node_order;  // real node ids in model order
  std::vector<RoutedEdge> edges;        // in edge model order
  double width = 0;
  double height = 0;
  std::map<std::string, CanvasLayout> children;
};

// Assigns rectangles and port anchors for one level. Layer positions are
// cumulative along the flow axis; in-layer packing follows `orders` exactly,
// then a single alignment pass nudges each element toward the mean of its
// neighbor centers, clamped so order and minimum spacing survive. Dummies get
// zero-extent rects so routes can pass through their centers. Compound nodes
// must already carry width/height large enough for their child canvas (the
// pipeline grows them before calling this).
CanvasLayout place_nodes(const Graph& graph, const Layering& layering,
                         const LayerOrders& orders, const Spacing& spacing);

// Adds polylines for the fused edges: source anchor, one bend per dummy
// center, target anchor. Edges must already be in declared orientation;
// reversed edges walk their chain backwards. Self-loops become a
// three-segment loop on the free side. `dummy_chain` maps edge id to its
// dummy ids in flow orientation.
void route_edges(const Graph& fused, CanvasLayout& layout,
                 const std::map<std::string, std::vector<std::string>>& dummy_chain,
                 const Spacing& spacing);

// Absolute center of every real node in the tree, keyed by slash-joined path
// ("parent/child" for nested nodes).
std::map<std::string, Point> absolute_centers(const CanvasLayout& layout);

}  // namespace strata
