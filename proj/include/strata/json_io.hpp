#pragma once

#include <string>
#include <vector>

#include "strata/geometry.hpp"
#include "strata/graph.hpp"

namespace strata {

// Reads the interchange JSON format. Node model order is list position; edge
// and port orders default to list position when absent and edge orders are
// renumbered densely preserving their relative order. Geometry fields
// produced by emit_layout_json (x, y, anchor, bendPoints, reversed, canvas)
// are recognized and ignored, so emitted layouts re-ingest cleanly. Unknown
// fields throw SchemaError when strict, otherwise append to `warnings`.
// Structural validation failures throw InputError.
Graph parse_json_graph(const std::string& text, bool strict = true,
                       std::vector<std::string>* warnings = nullptr);

// Serializes a graph without geometry, in the same schema parse_json_graph
// reads.
std::string emit_graph_json(const Graph& graph);

// Serializes a laid-out graph: the input schema plus x/y/width/height on
// nodes, anchor on ports, bendPoints and reversed on edges, and per-level
// canvas extents. `graph` must be in declared edge orientation; `layout`
// mirrors its hierarchy.
std::string emit_layout_json(const Graph& graph, const CanvasLayout& layout);

}  // namespace strata
