#include "strata/layering.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata {

Layering assign_layers(const Graph& graph) {
  auto index = node_index(graph);
  std::size_t n = graph.nodes.size();
  std::vector<int> in_deg(n, 0);
  for (const Edge& e : graph.edges)
    if (!e.is_self_loop()) ++in_deg[index.at(e.target)];

  std::vector<int> layer(n, 0);
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (in_deg[v] == 0) queue.push_back(v);

  // Kahn order; layer(v) settles once all predecessors are processed.
  std::size_t processed = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t v = queue[head];
    ++processed;
    for (const Edge& e : graph.edges) {
      if (e.is_self_loop() || index.at(e.source) != v) continue;
      std::size_t t = index.at(e.target);
      layer[t] = std::max(layer[t], layer[v] + 1);
      if (--in_deg[t] == 0) queue.push_back(t);
    }
  }
  if (processed != n)
    throw std::logic_error("layer assignment requires an acyclic graph");

  // pull-up: a node nobody points at sits just above its nearest successor
  for (std::size_t v = 0; v < n; ++v) {
    bool has_pred = false;
    int min_succ = -1;
    for (const Edge& e : graph.edges) {
      if (e.is_self_loop()) continue;
      if (index.at(e.target) == v) has_pred = true;
      if (index.at(e.source) == v) {
        int succ_layer = layer[index.at(e.target)];
        min_succ = min_succ < 0 ? succ_layer : std::min(min_succ, succ_layer);
      }
    }
    if (!has_pred && min_succ > 0) layer[v] = min_succ - 1;
  }

  Layering out;
  int max_layer = -1;
  for (std::size_t v = 0; v < n; ++v) {
    out.layer_of[graph.nodes[v].id] = layer[v];
    max_layer = std::max(max_layer, layer[v]);
  }
  out.layers.resize(static_cast<std::size_t>(max_layer + 1));
  for (std::size_t v = 0; v < n; ++v)
    out.layers[static_cast<std::size_t>(layer[v])].push_back(graph.nodes[v].id);
  return out;
}

std::pair<Graph, Layering> insert_dummies(const Graph& graph,
                                          const Layering& layering) {
  Graph out = graph;
  Layering lay = layering;
  auto index = node_index(graph);

  std::vector<std::size_t> by_order(graph.edges.size());
  for (std::size_t i = 0; i < by_order.size(); ++i) by_order[i] = i;
  std::sort(by_order.begin(), by_order.end(), [&](std::size_t a, std::size_t b) {
    return graph.edges[a].model_order < graph.edges[b].model_order;
  });

  std::vector<Edge> kept;
  std::vector<Edge> segments;
  std::vector<bool> split(graph.edges.size(), false);

  for (std::size_t i : by_order) {
    const Edge& e = graph.edges[i];
    if (e.is_self_loop()) continue;
    int src_layer = lay.layer_of.at(e.source);
    int tgt_layer = lay.layer_of.at(e.target);
    int span = tgt_layer - src_layer;
    if (span < 1)
      throw std::logic_error("edge '" + e.id + "' does not point to a later layer");
    if (span == 1) continue;

    const Node& declaring =
        graph.nodes[index.at(e.reversed ? e.target : e.source)];
    std::vector<std::string> chain;
    for (int k = 0; k < span - 1; ++k) {
      Node d;
      d.id = "$d:" + e.id + ":" + std::to_string(k);
      d.model_order = e.model_order;
      d.group = declaring.group;
      d.kind = "dummy";
      d.width = 0;
      d.height = 0;
      d.dummy = DummyInfo{e.id, e.model_order, declaring.model_order};
      int layer = src_layer + 1 + k;
      lay.layer_of[d.id] = layer;
      lay.layers[static_cast<std::size_t>(layer)].push_back(d.id);
      chain.push_back(d.id);
      out.nodes.push_back(std::move(d));
    }
    lay.dummy_chain[e.id] = chain;
    split[i] = true;

    for (int k = 0; k < span; ++k) {
      Edge seg = e;
      seg.id = e.id + "$" + std::to_string(k);
      seg.source = k == 0 ? e.source : chain[static_cast<std::size_t>(k - 1)];
      seg.target = k == span - 1 ? e.target : chain[static_cast<std::size_t>(k)];
      if (k != 0) seg.source_port.reset();
      if (k != span - 1) seg.target_port.reset();
      segments.push_back(std::move(seg));
    }
  }

  for (std::size_t i = 0; i < graph.edges.size(); ++i)
    if (!split[i]) kept.push_back(graph.edges[i]);
  for (Edge& seg : segments) kept.push_back(std::move(seg));
  out.edges = std::move(kept);
  return {std::move(out), std::move(lay)};
}

Graph fuse_dummy_chains(const Graph& graph) {
  std::map<std::string, std::string> owner_of_dummy;
  for (const Node& n : graph.nodes)
    if (n.is_dummy()) owner_of_dummy[n.id] = n.dummy->edge_id;

  Graph out = graph;
  out.nodes.clear();
  for (const Node& n : graph.nodes)
    if (!n.is_dummy()) out.nodes.push_back(n);

  out.edges.clear();
  std::map<std::string, Edge> fused;  // owner edge id -> rebuilt edge
  for (const Edge& e : graph.edges) {
    bool from_dummy = owner_of_dummy.count(e.source) > 0;
    bool to_dummy = owner_of_dummy.count(e.target) > 0;
    if (!from_dummy && !to_dummy) {
      out.edges.push_back(e);
      continue;
    }
    std::string owner = owner_of_dummy.count(from_dummy ? e.source : e.target)
                            ? owner_of_dummy.at(from_dummy ? e.source : e.target)
                            : e.id;
    auto [it, inserted] = fused.try_emplace(owner, e);
    Edge& rebuilt = it->second;
    rebuilt.id = owner;
    if (!from_dummy) {  // chain head: real source end
      rebuilt.source = e.source;
      rebuilt.source_port = e.source_port;
    }
    if (!to_dummy) {  // chain tail: real target end
      rebuilt.target = e.target;
      rebuilt.target_port = e.target_port;
    }
  }
  for (auto& [owner, edge] : fused) out.edges.push_back(edge);
  std::sort(out.edges.begin(), out.edges.end(),
            [](const Edge& a, const Edge& b) { return a.model_order < b.model_order; });
  return out;
}

}  // namespace strata
