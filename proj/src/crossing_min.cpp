#include "strata/crossing_min.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <optional>

#include "strata/metrics.hpp"

namespace strata {

namespace {

PortSide next_side(Direction d) {
  return d == Direction::Right ? PortSide::East : PortSide::South;
}
PortSide prev_side(Direction d) {
  return d == Direction::Right ? PortSide::West : PortSide::North;
}
PortSide free_side(Direction d) {
  return d == Direction::Right ? PortSide::South : PortSide::East;
}

std::map<std::string, int> positions_of(const std::vector<std::string>& layer) {
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < layer.size(); ++i)
    pos[layer[i]] = static_cast<int>(i);
  return pos;
}

// first-connection or median position of an element's predecessors in the
// previous layer; empty when it has none there
std::optional<double> connection_key(const Graph& graph, const std::string& id,
                                     const std::map<std::string, int>& prev_pos,
                                     DummyRule rule) {
  std::vector<std::pair<int, int>> preds;  // (edge order, source position)
  for (const Edge& e : graph.edges) {
    if (e.is_self_loop() || e.target != id) continue;
    auto it = prev_pos.find(e.source);
    if (it == prev_pos.end()) continue;
    preds.push_back({e.model_order, it->second});
  }
  if (preds.empty()) return std::nullopt;
  if (rule == DummyRule::FirstConnection) {
    auto first = *std::min_element(preds.begin(), preds.end());
    return static_cast<double>(first.second);
  }
  std::vector<int> pos;
  for (auto& [order, p] : preds) pos.push_back(p);
  std::sort(pos.begin(), pos.end());
  std::size_t mid = pos.size() / 2;
  if (pos.size() % 2 == 1) return static_cast<double>(pos[mid]);
  return (pos[mid - 1] + pos[mid]) / 2.0;
}

}  // namespace

std::pair<int, int> order_key(const Graph& graph, const std::string& element_id) {
  const Node* n = graph.find_node(element_id);
  if (!n) throw std::logic_error("unknown layer element '" + element_id + "'");
  if (n->is_dummy()) return {n->dummy->source_model_order, n->dummy->edge_model_order};
  return {n->model_order, -1};
}

int compare_dummy(const Graph& graph, const std::string& a, const std::string& b,
                  const std::vector<std::string>& prev_layer, DummyRule rule) {
  auto prev_pos = positions_of(prev_layer);
  auto ka = connection_key(graph, a, prev_pos, rule);
  auto kb = connection_key(graph, b, prev_pos, rule);
  if (ka && kb && *ka != *kb) return *ka < *kb ? -1 : 1;
  return order_key(graph, a) < order_key(graph, b) ? -1 : 1;
}

std::vector<std::vector<std::string>> preorder_by_model_order(
    const Graph& graph, const Layering& layering, DummyRule rule) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> prev;
  for (const auto& members : layering.layers) {
    std::vector<std::string> reals, dummies;
    for (const std::string& id : members)
      (graph.find_node(id)->is_dummy() ? dummies : reals).push_back(id);
    auto by_key = [&](const std::string& x, const std::string& y) {
      return order_key(graph, x) < order_key(graph, y);
    };
    std::sort(reals.begin(), reals.end(), by_key);
    std::sort(dummies.begin(), dummies.end(), by_key);

    std::vector<std::string> ordered = reals;
    for (const std::string& d : dummies) {
      std::size_t at = ordered.size();
      for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (compare_dummy(graph, d, ordered[i], prev, rule) < 0) {
          at = i;
          break;
        }
      }
      ordered.insert(ordered.begin() + static_cast<std::ptrdiff_t>(at), d);
    }
    out.push_back(ordered);
    prev = out.back();
  }
  return out;
}

namespace {

struct PortFacts {
  std::size_t decl_index = 0;
  const Port* port = nullptr;
  int prev_edges = 0;      // edges arriving here (this node is the target)
  int next_edges = 0;      // edges leaving here
  bool loop = false;       // referenced by a self-loop
  bool has_flow_edges = false;
  bool has_reversed = false;
  int min_edge_order = INT_MAX;
  double neighbor_sum = 0;
  int neighbor_count = 0;

  double mean_neighbor() const {
    return neighbor_count == 0 ? 0.0 : neighbor_sum / neighbor_count;
  }
};

}  // namespace

std::map<std::string, NodePortOrder> resolve_port_orders(
    const Graph& graph, const Layering& layering,
    const std::vector<std::vector<std::string>>& layers, PortPolicy policy) {
  std::map<std::string, int> pos;
  for (const auto& layer : layers)
    for (std::size_t i = 0; i < layer.size(); ++i)
      pos[layer[i]] = static_cast<int>(i);
  (void)layering;

  std::map<std::string, std::map<std::string, PortFacts>> facts;
  for (const Node& n : graph.nodes) {
    if (n.is_dummy()) continue;
    auto& per_node = facts[n.id];
    for (std::size_t i = 0; i < n.ports.size(); ++i)
      per_node[n.ports[i].id] = PortFacts{i, &n.ports[i], 0, 0, false,
                                          false,        false, INT_MAX, 0, 0};
  }

  auto touch = [&](const std::string& node, const std::optional<std::string>& port,
                   const Edge& e, bool outgoing, const std::string& other) {
    if (!port) return;
    auto node_it = facts.find(node);
    if (node_it == facts.end()) return;
    auto it = node_it->second.find(*port);
    if (it == node_it->second.end()) return;
    PortFacts& f = it->second;
    f.min_edge_order = std::min(f.min_edge_order, e.model_order);
    if (e.is_self_loop()) {
      f.loop = true;
      return;
    }
    f.has_flow_edges = true;
    if (outgoing)
      ++f.next_edges;
    else
      ++f.prev_edges;
    if (e.reversed) f.has_reversed = true;
    auto p = pos.find(other);
    if (p != pos.end()) {
      f.neighbor_sum += p->second;
      ++f.neighbor_count;
    }
  };
  for (const Edge& e : graph.edges) {
    touch(e.source, e.source_port, e, true, e.target);
    touch(e.target, e.target_port, e, false, e.source);
  }

  std::map<std::string, NodePortOrder> out;
  for (const Node& n : graph.nodes) {
    if (n.is_dummy()) continue;
    NodePortOrder order;
    std::map<PortSide, std::vector<const PortFacts*>> sides;
    for (const Port& p : n.ports) {
      const PortFacts& f = facts[n.id][p.id];
      PortSide side = p.side;
      if (side == PortSide::Unassigned) {
        if (f.has_flow_edges)
          side = f.next_edges >= f.prev_edges ? next_side(graph.direction)
                                              : prev_side(graph.direction);
        else if (f.loop)
          side = free_side(graph.direction);
        else
          side = next_side(graph.direction);
      }
      sides[side].push_back(&f);
    }
    bool fixed = n.fixed_port_order || policy == PortPolicy::FixedModelOrder;
    for (auto& [side, list] : sides) {
      if (fixed) {
        std::stable_sort(list.begin(), list.end(),
                         [](const PortFacts* a, const PortFacts* b) {
                           return a->port->model_order < b->port->model_order;
                         });
      } else {
        std::sort(list.begin(), list.end(), [](const PortFacts* a,
                                               const PortFacts* b) {
          auto key = [](const PortFacts* f) {
            return std::make_tuple(f->has_flow_edges || f->loop ? 0 : 1,
                                   f->mean_neighbor(), f->has_reversed ? 1 : 0,
                                   f->min_edge_order, f->port->model_order,
                                   f->decl_index);
          };
          return key(a) < key(b);
        });
      }
      std::vector<std::string>* bucket = nullptr;
      switch (side) {
        case PortSide::North: bucket = &order.north; break;
        case PortSide::East: bucket = &order.east; break;
        case PortSide::South: bucket = &order.south; break;
        case PortSide::West: bucket = &order.west; break;
        case PortSide::Unassigned: bucket = &order.east; break;
      }
      for (const PortFacts* f : list) bucket->push_back(f->port->id);
    }
    out[n.id] = std::move(order);
  }
  return out;
}

std::map<std::string, std::map<std::string, EndpointRank>> endpoint_ranks(
    const Graph& graph, const LayerOrders& orders) {
  // carriers: ports actually referenced by edges in each direction
  std::map<std::string, std::map<std::string, int>> carries_next, carries_prev;
  for (const Edge& e : graph.edges) {
    if (e.is_self_loop()) continue;
    if (e.source_port) carries_next[e.source][*e.source_port] = 1;
    if (e.target_port) carries_prev[e.target][*e.target_port] = 1;
  }

  std::map<std::string, std::map<std::string, EndpointRank>> out;
  for (const auto& [node, po] : orders.ports) {
    const std::vector<std::string>* by_side[4] = {&po.north, &po.east, &po.south,
                                                  &po.west};
    PortSide side_ids[4] = {PortSide::North, PortSide::East, PortSide::South,
                            PortSide::West};
    auto build = [&](PortSide facing,
                     const std::map<std::string, std::map<std::string, int>>&
                         carriers) {
      std::vector<std::string> seq;
      for (int s = 0; s < 4; ++s)
        if (side_ids[s] == facing)
          for (const std::string& p : *by_side[s]) seq.push_back(p);
      for (int s = 0; s < 4; ++s) {
        if (side_ids[s] == facing) continue;
        auto it = carriers.find(node);
        for (const std::string& p : *by_side[s])
          if (it != carriers.end() && it->second.count(p)) seq.push_back(p);
      }
      return seq;
    };
    auto next_seq = build(next_side(graph.direction), carries_next);
    auto prev_seq = build(prev_side(graph.direction), carries_prev);
    auto& ranks = out[node];
    for (std::size_t i = 0; i < next_seq.size(); ++i)
      ranks[next_seq[i]].next = static_cast<int>(i);
    for (std::size_t i = 0; i < prev_seq.size(); ++i)
      ranks[prev_seq[i]].prev = static_cast<int>(i);
  }
  return out;
}

std::size_t model_order_inversions(
    const Graph& graph, const std::vector<std::vector<std::string>>& layers,
    bool group_restricted) {
  std::size_t inversions = 0;
  for (const auto& layer : layers) {
    std::vector<std::pair<std::pair<int, int>, int>> keyed;  // (key, group)
    for (const std::string& id : layer) {
      const Node* n = graph.find_node(id);
      keyed.push_back({order_key(graph, id), n->group});
    }
    for (std::size_t i = 0; i < keyed.size(); ++i)
      for (std::size_t j = i + 1; j < keyed.size(); ++j) {
        if (group_restricted && keyed[i].second != keyed[j].second) continue;
        if (keyed[i].first > keyed[j].first) ++inversions;
      }
  }
  return inversions;
}

namespace {

struct SweepContext {
  const Graph& graph;
  const Layering& layering;
  const CrossMinOptions& options;
  // adjacency by node id: (other endpoint, edge index)
  std::map<std::string, std::vector<std::size_t>> in_edges, out_edges;
};

// Re-sorts `layer` by barycenters against the fixed neighbor layer.
// fixed_is_prev selects which adjacency feeds the means.
void barycenter_pass(SweepContext& ctx, std::vector<std::string>& layer,
                     const std::vector<std::string>& fixed, bool fixed_is_prev) {
  auto fixed_pos = positions_of(fixed);
  struct Entry {
    std::string id;
    double b = 0;
    std::pair<int, int> key;
    int group = 0;
    std::size_t current = 0;
  };
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < layer.size(); ++k) {
    Entry en;
    en.id = layer[k];
    en.current = k;
    en.key = order_key(ctx.graph, en.id);
    en.group = ctx.graph.find_node(en.id)->group;
    const auto& incident = fixed_is_prev ? ctx.in_edges[en.id] : ctx.out_edges[en.id];
    double sum = 0;
    int count = 0;
    for (std::size_t e : incident) {
      const Edge& edge = ctx.graph.edges[e];
      const std::string& other = fixed_is_prev ? edge.source : edge.target;
      auto it = fixed_pos.find(other);
      if (it == fixed_pos.end()) continue;
      sum += it->second;
      ++count;
    }
    en.b = count == 0 ? static_cast<double>(k) : sum / count;
    entries.push_back(std::move(en));
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.b < b.b; });

  bool mo_mode = ctx.options.strategy == CrossMinStrategy::BarycenterMo;
  if (mo_mode) {
    std::size_t start = 0;
    while (start < entries.size()) {
      std::size_t end = start + 1;
      while (end < entries.size() &&
             entries[end].b - entries[end - 1].b <= ctx.options.tie_epsilon)
        ++end;
      if (end - start > 1) {
        if (!ctx.options.group_restricted) {
          std::stable_sort(entries.begin() + static_cast<std::ptrdiff_t>(start),
                           entries.begin() + static_cast<std::ptrdiff_t>(end),
                           [](const Entry& a, const Entry& b) {
                             return a.key < b.key;
                           });
        } else {
          std::map<int, std::vector<std::size_t>> slots;
          for (std::size_t i = start; i < end; ++i)
            slots[entries[i].group].push_back(i);
          for (auto& [group, idxs] : slots) {
            std::vector<Entry> members;
            for (std::size_t i : idxs) members.push_back(entries[i]);
            std::stable_sort(members.begin(), members.end(),
                             [](const Entry& a, const Entry& b) {
                               return a.key < b.key;
                             });
            for (std::size_t m = 0; m < idxs.size(); ++m)
              entries[idxs[m]] = members[m];
          }
        }
      }
      start = end;
    }
  }
  for (std::size_t i = 0; i < layer.size(); ++i) layer[i] = entries[i].id;
}

}  // namespace

LayerOrders minimize_crossings(const Graph& graph, const Layering& layering,
                               const CrossMinOptions& options) {
  auto finish = [&](std::vector<std::vector<std::string>> layers) {
    LayerOrders orders;
    orders.ports =
        resolve_port_orders(graph, layering, layers, options.port_policy);
    orders.layers = std::move(layers);
    return orders;
  };

  if (options.strategy == CrossMinStrategy::StrictMo)
    return finish(preorder_by_model_order(graph, layering, options.dummy_rule));

  bool mo_mode = options.strategy == CrossMinStrategy::BarycenterMo;
  std::vector<std::vector<std::string>> current =
      mo_mode ? preorder_by_model_order(graph, layering, options.dummy_rule)
              : layering.layers;

  SweepContext ctx{graph, layering, options, {}, {}};
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (graph.edges[e].is_self_loop()) continue;
    ctx.out_edges[graph.edges[e].source].push_back(e);
    ctx.in_edges[graph.edges[e].target].push_back(e);
  }

  auto evaluate = [&](const std::vector<std::vector<std::string>>& layers) {
    LayerOrders orders = finish(layers);
    std::size_t crossings = count_crossings(graph, layering, orders);
    std::size_t inversions =
        mo_mode ? model_order_inversions(graph, layers, options.group_restricted)
                : 0;
    return std::make_pair(crossings, inversions);
  };

  auto best = current;
  auto best_score = evaluate(current);

  std::size_t layer_count = current.size();
  if (best_score.first > 0 && layer_count > 1) {
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
      std::size_t previous_best = best_score.first;
      for (int upward = 0; upward <= 1; ++upward) {
        if (!upward) {
          for (std::size_t i = 1; i < layer_count; ++i)
            barycenter_pass(ctx, current[i], current[i - 1], true);
        } else {
          for (std::size_t i = layer_count - 1; i-- > 0;)
            barycenter_pass(ctx, current[i], current[i + 1], false);
        }
        auto score = evaluate(current);
        if (mo_mode ? score < best_score : score.first <= best_score.first) {
          best = current;
          best_score = score;
        }
      }
      if (best_score.first == 0 || best_score.first >= previous_best) break;
    }
  }
  return finish(best);
}

}  // namespace strata
