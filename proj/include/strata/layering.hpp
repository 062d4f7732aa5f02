#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strata/graph.hpp"

namespace strata {

struct Layering {
  std::map<std::string, int> layer_of;
  // membership lists: real nodes in model order, dummies appended in edge order
  std::vector<std::vector<std::string>> layers;
  // edge id -> its dummy chain, listed source-to-target in phase orientation
  std::map<std::string, std::vector<std::string>> dummy_chain;
};

// Longest-path layering (self-loops ignored): layer = max over predecessors
// + 1, sources at 0; afterwards every predecessor-less node with successors
// is pulled up to (min successor layer - 1). Throws std::logic_error if the
// graph is cyclic - callers must break cycles first.
Layering assign_layers(const Graph& graph);

// Splits each edge spanning k > 1 layers into k unit segments joined by k-1
// dummy nodes. Dummies inherit the owner edge's id, model order, declaring
// (pre-reversal) source node order, and that node's group. Segment ids are
// "<edge>$<i>"; dummy ids "$d:<edge>:<i>". Self-loops pass through unchanged.
std::pair<Graph, Layering> insert_dummies(const Graph& graph,
                                          const Layering& layering);

// Inverse of insert_dummies: drops dummy nodes and re-fuses segment chains.
// The resulting edge list is sorted by model order.
Graph fuse_dummy_chains(const Graph& graph);

}  // namespace strata
