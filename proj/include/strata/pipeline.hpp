#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/config.hpp"
#include "strata/crossing_min.hpp"
#include "strata/cycle_breaking.hpp"
#include "strata/geometry.hpp"
#include "strata/graph.hpp"
#include "strata/layering.hpp"
#include "strata/metrics.hpp"

namespace strata {

// Everything the phases produced for one hierarchy level, kept for
// inspection (metrics, explain traces, tests).
struct LevelResult {
  Graph phase_graph;  // reals + dummies, unit-span edges, flow orientation
  std::vector<std::string> reversed_edges;
  Layering layering;
  std::vector<std::vector<std::string>> preorder;  // model-order ordering
  LayerOrders orders;
  std::map<std::string, LevelResult> children;  // by compound node id
};

struct LayoutResult {
  // Input hierarchy with implicit ports added, compound nodes grown to fit
  // their children, and edges in declared orientation carrying reversed
  // flags.
  Graph graph;
  LevelResult level;
  CanvasLayout geometry;
  MetricsReport metrics;
  LayoutConfig config;
};

// Runs the full pipeline: validation, implicit ports, child layouts
// (bottom-up), cycle breaking, layering, crossing minimization, placement,
// routing, metrics. Throws InputError on validation failure and
// std::logic_error when a phase breaks one of its own guarantees.
LayoutResult run_layout(const Graph& input, const LayoutConfig& config);

// Flattened placement summary for stability comparisons.
StabilityInput stability_input(const LayoutResult& result);

// Human-readable phase trace: exactly five sections (cycle breaking, layer
// assignment, model-order pre-order, final orders, metrics), child levels
// reported inside each section.
std::string explain_text(const LayoutResult& result);

}  // namespace strata
