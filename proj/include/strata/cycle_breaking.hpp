#pragma once

#include <string>
#include <vector>

#include "strata/graph.hpp"

namespace strata {

enum class CycleBreakStrategy { Greedy, DepthFirstMo, StrictMo, SccMo };

struct ReversalSet {
  std::vector<std::string> reversed_edges;  // edge ids, ascending model order
  Graph graph;  // endpoints and port refs swapped on reversed edges, flags set
};

// Self-loops are never reversed and do not count towards acyclicity.
//  Greedy       - sink/source peeling, ties to the lowest model order
//  DepthFirstMo - DFS in model order, edges closing onto the stack reversed
//  StrictMo     - reverses exactly the edges whose source order > target order
//  SccMo        - only edges inside a non-trivial strongly connected component
//                 are candidates; within one, the StrictMo predicate applies
ReversalSet break_cycles(const Graph& graph, CycleBreakStrategy strategy);

// Swaps endpoints and port references of the listed edges and toggles their
// reversed flag. An involution: applying it twice restores the input.
Graph apply_reversals(Graph graph, const std::vector<std::string>& edge_ids);

bool is_acyclic_ignoring_self_loops(const Graph& graph);

}  // namespace strata
