#include "strata/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

namespace {

struct LevelOutcome {
  Graph graph;  // declared orientation, fused edges, grown compound nodes
  LevelResult result;
  CanvasLayout canvas;
  MetricsReport metrics;  // this level plus its children
};

LevelOutcome layout_level(Graph graph, const LayoutConfig& config) {
  graph.direction = config.direction;
  synthesize_implicit_ports(graph);

  LevelOutcome out;

  // Children first: a compound node must know its canvas before placement.
  for (Node& n : graph.nodes) {
    if (!n.has_children()) continue;
    LevelOutcome child = layout_level(std::move(n.children.front()), config);
    n.children.front() = std::move(child.graph);
    n.width = std::max(n.width, child.canvas.width + 2 * kCompoundPad);
    n.height =
        std::max(n.height, child.canvas.height + kCompoundHeader + kCompoundPad);
    out.metrics.crossings += child.metrics.crossings;
    out.metrics.backward_edges += child.metrics.backward_edges;
    out.metrics.node_inversions += child.metrics.node_inversions;
    out.metrics.edge_inversions += child.metrics.edge_inversions;
    out.result.children.emplace(n.id, std::move(child.result));
    out.canvas.children.emplace(n.id, std::move(child.canvas));
  }

  ReversalSet reversal = break_cycles(graph, config.cycle_breaking);

  auto [phase, layering] =
      insert_dummies(reversal.graph, assign_layers(reversal.graph));

  CrossMinOptions options;
  options.strategy = config.crossing_min;
  options.port_policy = config.port_policy;
  options.dummy_rule = config.dummy_rule;
  options.group_restricted = config.group_restricted;
  LayerOrders orders = minimize_crossings(phase, layering, options);

  CanvasLayout canvas = place_nodes(phase, layering, orders, config.spacing);
  canvas.children = std::move(out.canvas.children);

  // Fuse segment chains back into the declared edges and restore reversed
  // edges to their declared orientation (flag kept for reporting).
  Graph fused = fuse_dummy_chains(phase);
  for (Edge& e : fused.edges) {
    if (!e.reversed) continue;
    std::swap(e.source, e.target);
    std::swap(e.source_port, e.target_port);
  }
  route_edges(fused, canvas, layering.dummy_chain, config.spacing);

  out.metrics.crossings += count_crossings(phase, layering, orders);
  out.metrics.backward_edges += reversal.reversed_edges.size();
  out.metrics.node_inversions += count_inversions(
      phase, orders, InversionScope::NodesInLayer, config.group_restricted);
  out.metrics.edge_inversions += count_inversions(
      phase, orders, InversionScope::GlobalEdges, config.group_restricted);
  out.metrics.layer_count = orders.layers.size();

  out.result.phase_graph = std::move(phase);
  out.result.reversed_edges = reversal.reversed_edges;
  out.result.layering = layering;
  out.result.preorder = preorder_by_model_order(out.result.phase_graph,
                                                layering, options.dummy_rule);
  out.result.orders = std::move(orders);

  // Public graph: real nodes (children already replaced), fused edges.
  Graph public_graph = std::move(fused);
  public_graph.nodes.clear();
  for (Node& n : graph.nodes) public_graph.nodes.push_back(std::move(n));
  out.graph = std::move(public_graph);
  out.canvas = std::move(canvas);
  return out;
}

}  // namespace

LayoutResult run_layout(const Graph& input, const LayoutConfig& config) {
  auto violations = validate(input);
  if (!violations.empty()) {
    std::string msg;
    for (const Violation& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += v.code + " (" + v.element + "): " + v.message;
    }
    throw InputError(msg);
  }

  LevelOutcome out = layout_level(input, config);
  LayoutResult result;
  result.graph = std::move(out.graph);
  result.level = std::move(out.result);
  result.geometry = std::move(out.canvas);
  result.metrics = out.metrics;
  result.config = config;
  return result;
}

namespace {

void collect_slots(const LevelResult& level, const std::string& path,
                   std::map<std::string, NodeSlot>& out) {
  for (std::size_t i = 0; i < level.orders.layers.size(); ++i) {
    const auto& layer = level.orders.layers[i];
    int position = 0;
    for (const std::string& id : layer) {
      if (level.phase_graph.find_node(id)->is_dummy()) continue;
      out[path + id] =
          NodeSlot{path, static_cast<int>(i), position};
      ++position;
    }
  }
  for (const auto& [id, child] : level.children)
    collect_slots(child, path + id + "/", out);
}

}  // namespace

StabilityInput stability_input(const LayoutResult& result) {
  StabilityInput input;
  input.centers = absolute_centers(result.geometry);
  collect_slots(result.level, "", input.slots);
  return input;
}

namespace {

std::string joined(const std::vector<std::string>& items) {
  if (items.empty()) return "(none)";
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

void print_layers(std::ostringstream& out, const std::string& path,
                  const std::vector<std::vector<std::string>>& layers) {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    out << "  ";
    if (!path.empty()) out << path << " ";
    out << "layer " << i << ": " << joined(layers[i]) << "\n";
  }
}

template <typename Fn>
void each_level(const LevelResult& level, const std::string& path, Fn&& fn) {
  fn(level, path);
  for (const auto& [id, child] : level.children)
    each_level(child, path + id + "/", fn);
}

}  // namespace

std::string explain_text(const LayoutResult& result) {
  std::ostringstream out;

  out << "== cycle breaking ==\n";
  out << "  strategy: " << to_string(result.config.cycle_breaking) << "\n";
  each_level(result.level, "", [&](const LevelResult& level, const std::string& path) {
    out << "  ";
    if (!path.empty()) out << path << " ";
    out << "reversed edges: " << joined(level.reversed_edges) << "\n";
  });

  out << "== layer assignment ==\n";
  each_level(result.level, "", [&](const LevelResult& level, const std::string& path) {
    print_layers(out, path, level.layering.layers);
  });

  out << "== model-order pre-order ==\n";
  out << "  dummy rule: " << to_string(result.config.dummy_rule) << "\n";
  each_level(result.level, "", [&](const LevelResult& level, const std::string& path) {
    print_layers(out, path, level.preorder);
  });

  out << "== final orders ==\n";
  out << "  strategy: " << to_string(result.config.crossing_min) << "\n";
  each_level(result.level, "", [&](const LevelResult& level, const std::string& path) {
    print_layers(out, path, level.orders.layers);
  });

  out << "== metrics ==\n";
  std::istringstream table(metrics_table(result.metrics));
  std::string line;
  while (std::getline(table, line)) out << "  " << line << "\n";
  return out.str();
}

}  // namespace strata
