#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strata/graph.hpp"
#include "strata/layering.hpp"

namespace strata {

enum class CrossMinStrategy { Barycenter, BarycenterMo, StrictMo };
enum class PortPolicy { DerivedFromEdges, FixedModelOrder };
enum class DummyRule { FirstConnection, AllConnections };

struct CrossMinOptions {
  CrossMinStrategy strategy = CrossMinStrategy::BarycenterMo;
  PortPolicy port_policy = PortPolicy::FixedModelOrder;
  DummyRule dummy_rule = DummyRule::FirstConnection;
  bool group_restricted = false;
  int max_sweeps = 8;
  double tie_epsilon = 1e-9;
};

struct NodePortOrder {
  std::vector<std::string> north, east, south, west;
};

struct LayerOrders {
  std::vector<std::vector<std::string>> layers;  // final order per layer
  std::map<std::string, NodePortOrder> ports;    // per-node, per-side order
};

// The key a layer element contributes to model-order comparisons: a real node
// is (its order, -1); a dummy is (declaring node's order, edge order), so a
// node precedes the dummies of its own edges, and dummies of backward edges
// land after the forward edges of the node they re-enter.
std::pair<int, int> order_key(const Graph& graph, const std::string& element_id);

// -1 if a should precede b, +1 otherwise. Elements compare by the position of
// their first-connection predecessor in prev_layer (or the median over all
// predecessors under DummyRule::AllConnections); an element without
// predecessors, or a positional tie, falls back to order_key.
int compare_dummy(const Graph& graph, const std::string& a, const std::string& b,
                  const std::vector<std::string>& prev_layer, DummyRule rule);

// Model-order pre-ordering: per layer, real nodes ascend by node order and
// each dummy is inserted before the first element it precedes (compare_dummy
// against the already-ordered previous layer).
std::vector<std::vector<std::string>> preorder_by_model_order(
    const Graph& graph, const Layering& layering, DummyRule rule);

// Per-side port orders. Nodes with fixed_port_order always keep their input
// (model) order; otherwise DerivedFromEdges sorts each side by mean neighbor
// position with ties broken by edge order, backward edges after forward ones.
// Unassigned sides resolve to the side facing the port's edges; ports whose
// only edges are self-loops take the free side (South for Right, East for
// Down layouts).
std::map<std::string, NodePortOrder> resolve_port_orders(
    const Graph& graph, const Layering& layering,
    const std::vector<std::vector<std::string>>& layers, PortPolicy policy);

// Per-endpoint attachment ranks used to refine crossing counts: position of
// the port among the node's ports facing the previous/next layer.
struct EndpointRank {
  int prev = 0;
  int next = 0;
};
std::map<std::string, std::map<std::string, EndpointRank>> endpoint_ranks(
    const Graph& graph, const LayerOrders& orders);

// Barycenter = mean position of fixed-layer neighbors (own position when a
// node has none). Ties within tie_epsilon: model order under BarycenterMo
// (restricted to equal groups when group_restricted), current order under
// Barycenter. Up/down sweeps run until crossings stop improving (at most
// max_sweeps); the best visited order wins - judged by crossings, then by
// model-order inversions under BarycenterMo. StrictMo returns the pre-order.
LayerOrders minimize_crossings(const Graph& graph, const Layering& layering,
                               const CrossMinOptions& options);

// Kendall-tau distance between layer orders and the model order over
// comparable pairs: same layer, same group when group_restricted. Dummies
// participate with their inherited keys.
std::size_t model_order_inversions(
    const Graph& graph, const std::vector<std::vector<std::string>>& layers,
    bool group_restricted);

}  // namespace strata
