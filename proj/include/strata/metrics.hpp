#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "strata/crossing_min.hpp"
#include "strata/geometry.hpp"
#include "strata/graph.hpp"
#include "strata/layering.hpp"

namespace strata {

// Which element pairs an inversion count compares against model order.
enum class InversionScope {
  NodesInLayer,  // node pairs sharing a layer
  EdgesAtPort,   // edges fanning out of one port, by attachment order
  GlobalEdges,   // edges sharing a source node, by target position
};

struct MetricsReport {
  std::size_t crossings = 0;
  std::size_t backward_edges = 0;
  std::size_t node_inversions = 0;
  std::size_t edge_inversions = 0;
  std::size_t layer_count = 0;
  std::optional<double> stability_distance;
  std::optional<double> stability_displacement;
  std::optional<std::size_t> stability_order_flips;
};

// Crossings between every adjacent layer pair, counted over endpoint keys
// (layer position, port rank) so parallel edges into distinct ports of one
// node are distinguished. Runs one inversion count per layer gap.
std::size_t count_crossings(const Graph& graph, const Layering& layering,
                            const LayerOrders& orders);

// Comparable pairs whose layout order disagrees with model order. Comparable
// means same layer (and same group when group_restricted) for nodes, same
// port for EdgesAtPort, same source node for GlobalEdges.
std::size_t count_inversions(const Graph& graph, const LayerOrders& orders,
                             InversionScope scope, bool group_restricted);

// Placement summary of one layout, flattened across hierarchy levels; keys
// are slash-joined node paths.
struct NodeSlot {
  std::string level;  // path of the containing compound ("" at top level)
  int layer = 0;
  int position = 0;  // index within the layer order
};
struct StabilityInput {
  std::map<std::string, Point> centers;
  std::map<std::string, NodeSlot> slots;
};

struct StabilityReport {
  double mean_displacement = 0;  // after top-left origin normalization
  std::size_t order_flips = 0;   // pairs sharing a layer in both layouts
  std::size_t shared_nodes = 0;
};

// Pseudo-distance between two layouts of related graphs over their shared
// node ids. Absent when nothing is shared.
std::optional<StabilityReport> stability_distance(const StabilityInput& a,
                                                  const StabilityInput& b);

// Serializations used by the CLI.
std::string metrics_to_json(const MetricsReport& report);
std::string metrics_table(const MetricsReport& report);

}  // namespace strata
