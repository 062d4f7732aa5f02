#include "strata/cycle_breaking.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "strata/errors.hpp"

namespace strata {

namespace {

struct Adjacency {
  std::map<std::string, std::size_t> index;
  // per node: outgoing/incoming edge indices, self-loops excluded
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> in;
};

Adjacency build_adjacency(const Graph& g) {
  Adjacency adj;
  adj.index = node_index(g);
  adj.out.resize(g.nodes.size());
  adj.in.resize(g.nodes.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].is_self_loop()) continue;
    adj.out[adj.index.at(g.edges[e].source)].push_back(e);
    adj.in[adj.index.at(g.edges[e].target)].push_back(e);
  }
  for (auto& edges : adj.out)
    std::sort(edges.begin(), edges.end(), [&](std::size_t a, std::size_t b) {
      return g.edges[a].model_order < g.edges[b].model_order;
    });
  return adj;
}

std::vector<std::string> strict_mo(const Graph& g) {
  auto index = node_index(g);
  std::vector<std::string> reversed;
  for (const Edge& e : g.edges) {
    if (e.is_self_loop()) continue;
    if (g.nodes[index.at(e.source)].model_order >
        g.nodes[index.at(e.target)].model_order)
      reversed.push_back(e.id);
  }
  return reversed;
}

std::vector<std::string> depth_first_mo(const Graph& g) {
  Adjacency adj = build_adjacency(g);
  std::size_t n = g.nodes.size();
  enum { White, OnStack, Done };
  std::vector<int> state(n, White);
  std::vector<std::string> reversed;

  auto dfs = [&](std::size_t root) {
    // (node, next position in its out list)
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = OnStack;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == adj.out[v].size()) {
        state[v] = Done;
        stack.pop_back();
        continue;
      }
      std::size_t e = adj.out[v][next++];
      std::size_t w = adj.index.at(g.edges[e].target);
      if (state[w] == OnStack) {
        reversed.push_back(g.edges[e].id);
      } else if (state[w] == White) {
        state[w] = OnStack;
        stack.push_back({w, 0});
      }
    }
  };

  // roots: nodes without incoming edges first, then any unvisited node,
  // both in ascending model order (node list order)
  for (std::size_t v = 0; v < n; ++v)
    if (adj.in[v].empty() && state[v] == White) dfs(v);
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == White) dfs(v);
  return reversed;
}

// Tarjan, iterative. Returns the component id of every node.
std::vector<int> strongly_connected_components(const Graph& g, const Adjacency& adj) {
  std::size_t n = g.nodes.size();
  std::vector<int> comp(n, -1), low(n), num(n, -1);
  std::vector<std::size_t> scc_stack;
  std::vector<bool> on_scc_stack(n, false);
  int counter = 0, comp_count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    num[root] = low[root] = counter++;
    scc_stack.push_back(root);
    on_scc_stack[root] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj.out[v].size()) {
        std::size_t w = adj.index.at(g.edges[adj.out[v][next++]].target);
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          scc_stack.push_back(w);
          on_scc_stack[w] = true;
          stack.push_back({w, 0});
        } else if (on_scc_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            std::size_t w = scc_stack.back();
            scc_stack.pop_back();
            on_scc_stack[w] = false;
            comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
        std::size_t finished = v;
        stack.pop_back();
        if (!stack.empty())
          low[stack.back().first] = std::min(low[stack.back().first], low[finished]);
      }
    }
  }
  return comp;
}

std::vector<std::string> scc_mo(const Graph& g) {
  Adjacency adj = build_adjacency(g);
  std::vector<int> comp = strongly_connected_components(g, adj);
  std::vector<int> comp_size(g.nodes.size(), 0);
  for (int c : comp) ++comp_size[c];

  auto index = node_index(g);
  std::vector<std::string> reversed;
  for (const Edge& e : g.edges) {
    if (e.is_self_loop()) continue;
    std::size_t s = index.at(e.source), t = index.at(e.target);
    if (comp[s] != comp[t] || comp_size[comp[s]] < 2) continue;
    if (g.nodes[s].model_order > g.nodes[t].model_order) reversed.push_back(e.id);
  }
  return reversed;
}

std::vector<std::string> greedy_peel(const Graph& g) {
  std::size_t n = g.nodes.size();
  auto index = node_index(g);
  std::vector<int> out_deg(n, 0), in_deg(n, 0);
  for (const Edge& e : g.edges) {
    if (e.is_self_loop()) continue;
    ++out_deg[index.at(e.source)];
    ++in_deg[index.at(e.target)];
  }
  std::vector<bool> removed(n, false);
  std::size_t remaining = n;

  auto drop = [&](std::size_t v) {
    removed[v] = true;
    --remaining;
    for (const Edge& e : g.edges) {
      if (e.is_self_loop()) continue;
      std::size_t s = index.at(e.source), t = index.at(e.target);
      if (s == v && !removed[t]) --in_deg[t];
      if (t == v && !removed[s]) --out_deg[s];
    }
  };

  std::vector<std::size_t> prefix;
  std::deque<std::size_t> suffix;
  while (remaining > 0) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (std::size_t v = 0; v < n; ++v) {  // ascending model order
        if (!removed[v] && out_deg[v] == 0) {
          suffix.push_front(v);
          drop(v);
          progressed = true;
          break;
        }
      }
    }
    progressed = true;
    while (progressed) {
      progressed = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (!removed[v] && in_deg[v] == 0 && out_deg[v] > 0) {
          prefix.push_back(v);
          drop(v);
          progressed = true;
          break;
        }
      }
    }
    if (remaining > 0) {
      int best_diff = std::numeric_limits<int>::min();
      std::size_t best = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (removed[v]) continue;
        int diff = out_deg[v] - in_deg[v];
        if (diff > best_diff) {
          best_diff = diff;
          best = v;
        }
      }
      prefix.push_back(best);
      drop(best);
    }
  }

  std::vector<int> pos(n);
  int p = 0;
  for (std::size_t v : prefix) pos[v] = p++;
  for (std::size_t v : suffix) pos[v] = p++;
  std::vector<std::string> reversed;
  for (const Edge& e : g.edges) {
    if (e.is_self_loop()) continue;
    if (pos[index.at(e.source)] > pos[index.at(e.target)])
      reversed.push_back(e.id);
  }
  return reversed;
}

}  // namespace

Graph apply_reversals(Graph graph, const std::vector<std::string>& edge_ids) {
  std::set<std::string> ids(edge_ids.begin(), edge_ids.end());
  for (Edge& e : graph.edges) {
    if (!ids.count(e.id)) continue;
    std::swap(e.source, e.target);
    std::swap(e.source_port, e.target_port);
    e.reversed = !e.reversed;
  }
  return graph;
}

ReversalSet break_cycles(const Graph& graph, CycleBreakStrategy strategy) {
  std::vector<std::string> reversed;
  switch (strategy) {
    case CycleBreakStrategy::Greedy: reversed = greedy_peel(graph); break;
    case CycleBreakStrategy::DepthFirstMo: reversed = depth_first_mo(graph); break;
    case CycleBreakStrategy::StrictMo: reversed = strict_mo(graph); break;
    case CycleBreakStrategy::SccMo: reversed = scc_mo(graph); break;
  }
  std::map<std::string, int> order_of;
  for (const Edge& e : graph.edges) order_of[e.id] = e.model_order;
  std::sort(reversed.begin(), reversed.end(),
            [&](const std::string& a, const std::string& b) {
              return order_of.at(a) < order_of.at(b);
            });
  ReversalSet out{reversed, apply_reversals(graph, reversed)};
  if (!is_acyclic_ignoring_self_loops(out.graph))
    throw std::logic_error("cycle breaking left the graph cyclic");
  return out;
}

bool is_acyclic_ignoring_self_loops(const Graph& graph) {
  auto index = node_index(graph);
  std::vector<int> in_deg(graph.nodes.size(), 0);
  for (const Edge& e : graph.edges)
    if (!e.is_self_loop()) ++in_deg[index.at(e.target)];
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < graph.nodes.size(); ++v)
    if (in_deg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    std::size_t v = queue.back();
    queue.pop_back();
    ++seen;
    for (const Edge& e : graph.edges) {
      if (e.is_self_loop() || index.at(e.source) != v) continue;
      if (--in_deg[index.at(e.target)] == 0) queue.push_back(index.at(e.target));
    }
  }
  return seen == graph.nodes.size();
}

}  // namespace strata
