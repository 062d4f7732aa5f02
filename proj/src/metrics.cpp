#include "strata/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace strata {

namespace {

struct Fenwick {
  std::vector<std::size_t> tree;

  explicit Fenwick(std::size_t n) : tree(n + 1, 0) {}

  void add(std::size_t i) {
    for (++i; i < tree.size(); i += i & (~i + 1)) ++tree[i];
  }
  std::size_t prefix(std::size_t i) const {  // count of values <= i
    std::size_t s = 0;
    for (++i; i > 0; i -= i & (~i + 1)) s += tree[i];
    return s;
  }
};

using Key = std::pair<int, int>;  // (layer position, port rank)

// Count pairs ordered ascending by upper key whose lower keys are strictly
// descending — the classic two-layer crossing count.
std::size_t crossing_pairs(std::vector<std::pair<Key, Key>>& spans) {
  std::sort(spans.begin(), spans.end());
  std::vector<Key> lower;
  for (auto& [u, l] : spans) lower.push_back(l);
  std::vector<Key> sorted = lower;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Fenwick bit(sorted.size());
  std::size_t crossings = 0;
  std::size_t inserted = 0;
  for (const Key& l : lower) {
    std::size_t rank = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin());
    crossings += inserted - bit.prefix(rank);
    bit.add(rank);
    ++inserted;
  }
  return crossings;
}

}  // namespace

std::size_t count_crossings(const Graph& graph, const Layering& layering,
                            const LayerOrders& orders) {
  std::map<std::string, int> pos;
  for (const auto& layer : orders.layers)
    for (std::size_t i = 0; i < layer.size(); ++i)
      pos[layer[i]] = static_cast<int>(i);
  auto ranks = endpoint_ranks(graph, orders);

  auto rank_of = [&](const std::string& node,
                     const std::optional<std::string>& port, bool next) {
    if (!port) return 0;
    auto n = ranks.find(node);
    if (n == ranks.end()) return 0;
    auto p = n->second.find(*port);
    if (p == n->second.end()) return 0;
    return next ? p->second.next : p->second.prev;
  };

  std::size_t total = 0;
  if (orders.layers.size() < 2) return 0;
  for (std::size_t gap = 0; gap + 1 < orders.layers.size(); ++gap) {
    std::vector<std::pair<Key, Key>> spans;
    for (const Edge& e : graph.edges) {
      if (e.is_self_loop()) continue;
      auto ls = layering.layer_of.find(e.source);
      auto lt = layering.layer_of.find(e.target);
      if (ls == layering.layer_of.end() || lt == layering.layer_of.end())
        continue;
      if (ls->second != static_cast<int>(gap) ||
          lt->second != static_cast<int>(gap + 1))
        continue;
      Key upper{pos[e.source], rank_of(e.source, e.source_port, true)};
      Key lower{pos[e.target], rank_of(e.target, e.target_port, false)};
      spans.push_back({upper, lower});
    }
    total += crossing_pairs(spans);
  }
  return total;
}

namespace {

// Attachment key of an edge endpoint seen from the opposite end: where the
// far endpoint sits in its layer, refined by its port rank.
std::pair<int, int> far_key(
    const std::map<std::string, int>& pos,
    const std::map<std::string, std::map<std::string, EndpointRank>>& ranks,
    const std::string& node, const std::optional<std::string>& port,
    bool arriving) {
  int p = 0;
  auto at = pos.find(node);
  if (at != pos.end()) p = at->second;
  int r = 0;
  if (port) {
    auto n = ranks.find(node);
    if (n != ranks.end()) {
      auto it = n->second.find(*port);
      if (it != n->second.end()) r = arriving ? it->second.prev : it->second.next;
    }
  }
  return {p, r};
}

std::size_t disagreements(std::vector<std::pair<std::pair<int, int>, int>>& keyed) {
  // keyed: (attachment key, edge model order); count strict disagreements
  std::size_t count = 0;
  for (std::size_t i = 0; i < keyed.size(); ++i)
    for (std::size_t j = i + 1; j < keyed.size(); ++j) {
      auto& [ka, oa] = keyed[i];
      auto& [kb, ob] = keyed[j];
      if ((ka < kb && oa > ob) || (kb < ka && ob > oa)) ++count;
    }
  return count;
}

}  // namespace

std::size_t count_inversions(const Graph& graph, const LayerOrders& orders,
                             InversionScope scope, bool group_restricted) {
  if (scope == InversionScope::NodesInLayer)
    return model_order_inversions(graph, orders.layers, group_restricted);

  std::map<std::string, int> pos;
  for (const auto& layer : orders.layers)
    for (std::size_t i = 0; i < layer.size(); ++i)
      pos[layer[i]] = static_cast<int>(i);
  auto ranks = endpoint_ranks(graph, orders);

  if (scope == InversionScope::EdgesAtPort) {
    std::map<std::pair<std::string, std::string>,
             std::vector<std::pair<std::pair<int, int>, int>>>
        at_port;
    for (const Edge& e : graph.edges) {
      if (e.is_self_loop()) continue;
      if (e.source_port)
        at_port[{e.source, *e.source_port}].push_back(
            {far_key(pos, ranks, e.target, e.target_port, true), e.model_order});
      if (e.target_port)
        at_port[{e.target, *e.target_port}].push_back(
            {far_key(pos, ranks, e.source, e.source_port, false),
             e.model_order});
    }
    std::size_t total = 0;
    for (auto& [port, keyed] : at_port) total += disagreements(keyed);
    return total;
  }

  // GlobalEdges: fan-out order per source node against edge model order.
  std::map<std::string, std::vector<std::pair<std::pair<int, int>, int>>>
      by_source;
  for (const Edge& e : graph.edges) {
    if (e.is_self_loop()) continue;
    by_source[e.source].push_back(
        {far_key(pos, ranks, e.target, e.target_port, true), e.model_order});
  }
  std::size_t total = 0;
  for (auto& [source, keyed] : by_source) total += disagreements(keyed);
  return total;
}

std::optional<StabilityReport> stability_distance(const StabilityInput& a,
                                                  const StabilityInput& b) {
  std::vector<std::string> shared;
  for (const auto& [id, p] : a.centers)
    if (b.centers.count(id)) shared.push_back(id);
  if (shared.empty()) return std::nullopt;

  // Normalize both layouts to the top-left corner of the shared nodes'
  // center bounding box, so uniform translation costs nothing.
  auto origin = [&](const std::map<std::string, Point>& centers) {
    Point o{centers.at(shared.front()).x, centers.at(shared.front()).y};
    for (const std::string& id : shared) {
      o.x = std::min(o.x, centers.at(id).x);
      o.y = std::min(o.y, centers.at(id).y);
    }
    return o;
  };
  Point oa = origin(a.centers);
  Point ob = origin(b.centers);

  StabilityReport report;
  report.shared_nodes = shared.size();
  double sum = 0;
  for (const std::string& id : shared) {
    const Point& pa = a.centers.at(id);
    const Point& pb = b.centers.at(id);
    double dx = (pa.x - oa.x) - (pb.x - ob.x);
    double dy = (pa.y - oa.y) - (pb.y - ob.y);
    sum += std::sqrt(dx * dx + dy * dy);
  }
  report.mean_displacement = sum / static_cast<double>(shared.size());

  for (std::size_t i = 0; i < shared.size(); ++i)
    for (std::size_t j = i + 1; j < shared.size(); ++j) {
      const NodeSlot* sa1 = nullptr;
      const NodeSlot* sa2 = nullptr;
      const NodeSlot* sb1 = nullptr;
      const NodeSlot* sb2 = nullptr;
      auto f = a.slots.find(shared[i]);
      if (f != a.slots.end()) sa1 = &f->second;
      f = a.slots.find(shared[j]);
      if (f != a.slots.end()) sa2 = &f->second;
      f = b.slots.find(shared[i]);
      if (f != b.slots.end()) sb1 = &f->second;
      f = b.slots.find(shared[j]);
      if (f != b.slots.end()) sb2 = &f->second;
      if (!sa1 || !sa2 || !sb1 || !sb2) continue;
      bool same_a = sa1->level == sa2->level && sa1->layer == sa2->layer;
      bool same_b = sb1->level == sb2->level && sb1->layer == sb2->layer;
      if (!same_a || !same_b) continue;
      int da = sa1->position - sa2->position;
      int db = sb1->position - sb2->position;
      if ((da < 0) != (db < 0)) ++report.order_flips;
    }
  return report;
}

std::string metrics_to_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["crossings"] = report.crossings;
  j["backwardEdges"] = report.backward_edges;
  j["nodeInversions"] = report.node_inversions;
  j["edgeInversions"] = report.edge_inversions;
  j["layerCount"] = report.layer_count;
  if (report.stability_distance) {
    j["stability"] = nlohmann::ordered_json{
        {"distance", *report.stability_distance},
        {"displacement", *report.stability_displacement},
        {"orderFlips", *report.stability_order_flips},
    };
  }
  return j.dump(2) + "\n";
}

std::string metrics_table(const MetricsReport& report) {
  std::ostringstream out;
  auto row = [&](const char* name, const std::string& value) {
    out << name;
    for (std::size_t i = std::string(name).size(); i < 18; ++i) out << ' ';
    out << value << "\n";
  };
  row("crossings", std::to_string(report.crossings));
  row("backward edges", std::to_string(report.backward_edges));
  row("node inversions", std::to_string(report.node_inversions));
  row("edge inversions", std::to_string(report.edge_inversions));
  row("layer count", std::to_string(report.layer_count));
  if (report.stability_distance) {
    std::ostringstream v;
    v << *report.stability_distance;
    row("stability", v.str());
    std::ostringstream d;
    d << *report.stability_displacement;
    row("  displacement", d.str());
    row("  order flips", std::to_string(*report.stability_order_flips));
  }
  return out.str();
}

}  // namespace strata
