// End-to-end acceptance checks for the layout engine. Each check prints one
// PASS/FAIL line; the process exits nonzero if any check fails. All corpora
// are seeded, all tolerances and time limits are pinned here.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "strata/config.hpp"
#include "strata/crossing_min.hpp"
#include "strata/cycle_breaking.hpp"
#include "strata/dsl.hpp"
#include "strata/errors.hpp"
#include "strata/graph.hpp"
#include "strata/json_io.hpp"
#include "strata/layering.hpp"
#include "strata/metrics.hpp"
#include "strata/pipeline.hpp"
#include "strata/svg.hpp"
#include "../test_util.hpp"

using namespace strata;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kAcyclicCorpusLimitSeconds = 10.0;
constexpr double kCrossingCorpusLimitSeconds = 60.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::size_t kendall_inversions(const std::vector<int>& order) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j]) ++inv;
  return inv;
}

// ---------------------------------------------------------------- corpus ---

Graph random_corpus_graph(std::mt19937& rng) {
  return testutil::random_graph(rng, 50, 150, true);
}

// 1. Every strategy leaves every random graph acyclic, inside the time box.
Outcome check_acyclic_strategies() {
  std::mt19937 rng(1001);
  auto start = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    Graph g = random_corpus_graph(rng);
    for (auto strategy : {CycleBreakStrategy::Greedy, CycleBreakStrategy::DepthFirstMo,
                          CycleBreakStrategy::StrictMo, CycleBreakStrategy::SccMo}) {
      ReversalSet r = break_cycles(g, strategy);
      if (!is_acyclic_ignoring_self_loops(r.graph)) {
        return {false, "cyclic result at instance " + std::to_string(i) +
                           ", strategy " + to_string(strategy)};
      }
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed > kAcyclicCorpusLimitSeconds)
    return {false, "corpus took " + std::to_string(elapsed) + "s"};
  std::ostringstream d;
  d << "1000 graphs x 4 strategies in " << elapsed << "s";
  return {true, d.str()};
}

// 2. The strict strategy reverses exactly the declaration-backward edges.
Outcome check_strict_reversal_set() {
  std::mt19937 rng(1001);  // same corpus as check 1
  for (int i = 0; i < 1000; ++i) {
    Graph g = random_corpus_graph(rng);
    ReversalSet r = break_cycles(g, CycleBreakStrategy::StrictMo);
    std::vector<std::string> expected;
    auto index = node_index(g);
    for (const Edge& e : g.edges)
      if (!e.is_self_loop() && index.at(e.source) > index.at(e.target))
        expected.push_back(e.id);
    if (r.reversed_edges != expected)
      return {false, "mismatch at instance " + std::to_string(i)};
  }
  return {true, "reversal set == backward-declaration set on 1000 graphs"};
}

// 3. Crossing counts match pair enumeration; the sweep result sits between
//    the enumerated minimum and the model-order starting point.
Outcome check_crossing_counts() {
  auto start = Clock::now();

  std::mt19937 rng(1003);
  std::uniform_int_distribution<int> size7(1, 7);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 500; ++i) {
    int upper = size7(rng), lower = size7(rng);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < upper; ++u)
      for (int l = 0; l < lower; ++l)
        if (coin(rng)) arcs.push_back({u, l});
    Graph g = testutil::bilayer(upper, lower, arcs);
    auto [phase, layering] = insert_dummies(g, assign_layers(g));
    CrossMinOptions options;
    options.strategy = CrossMinStrategy::StrictMo;
    LayerOrders orders = minimize_crossings(phase, layering, options);
    std::vector<int> iu(upper), il(lower);
    for (int k = 0; k < upper; ++k) iu[k] = k;
    for (int k = 0; k < lower; ++k) il[k] = k;
    if (count_crossings(phase, layering, orders) !=
        testutil::brute_force_crossings(arcs, iu, il))
      return {false, "count mismatch at instance " + std::to_string(i)};
  }

  std::uniform_int_distribution<int> size5(2, 5);
  for (int i = 0; i < 200; ++i) {
    int upper = size5(rng), lower = size5(rng);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < upper; ++u)
      for (int l = 0; l < lower; ++l)
        if (coin(rng)) arcs.push_back({u, l});
    if (arcs.empty()) continue;
    Graph g = testutil::bilayer(upper, lower, arcs);
    auto [phase, layering] = insert_dummies(g, assign_layers(g));

    std::size_t minimum = SIZE_MAX;
    for (const auto& up : permutations(upper)) {
      std::vector<int> upos(upper);
      for (int k = 0; k < upper; ++k) upos[up[k]] = k;
      for (const auto& lo : permutations(lower)) {
        std::vector<int> lpos(lower);
        for (int k = 0; k < lower; ++k) lpos[lo[k]] = k;
        minimum = std::min(minimum,
                           testutil::brute_force_crossings(arcs, upos, lpos));
      }
    }

    CrossMinOptions options;
    options.strategy = CrossMinStrategy::BarycenterMo;
    LayerOrders got = minimize_crossings(phase, layering, options);
    std::size_t got_crossings = count_crossings(phase, layering, got);

    LayerOrders pre;
    pre.layers = preorder_by_model_order(phase, layering, options.dummy_rule);
    pre.ports =
        resolve_port_orders(phase, layering, pre.layers, options.port_policy);
    std::size_t pre_crossings = count_crossings(phase, layering, pre);

    if (got_crossings < minimum)
      return {false, "result below enumerated minimum at instance " +
                         std::to_string(i)};
    if (got_crossings > pre_crossings)
      return {false, "sweep worse than its starting order at instance " +
                         std::to_string(i)};
  }

  double elapsed = seconds_since(start);
  if (elapsed > kCrossingCorpusLimitSeconds)
    return {false, "corpus took " + std::to_string(elapsed) + "s"};
  std::ostringstream d;
  d << "500 exact counts + 200 bounded sweeps in " << elapsed << "s";
  return {true, d.str()};
}

// 4. On instances with several crossing-minimal orders (duplicate
//    neighborhoods), the tie-breaking sweep stays within the inversion count
//    of the worst minimal order, and the strict strategy has zero inversions.
Outcome check_inversions_among_minima() {
  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> usize(2, 4);
  std::uniform_int_distribution<int> lsize(3, 5);
  std::uniform_int_distribution<int> nclasses(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);

  int multi_minimum_instances = 0;
  for (int i = 0; i < 200; ++i) {
    int upper = usize(rng), lower = lsize(rng);
    int classes = std::min(nclasses(rng), lower);
    // Duplicate neighborhoods: lower node k uses class k % classes, so at
    // least two lower nodes are interchangeable whenever lower > classes.
    std::vector<std::vector<int>> neighborhood(classes);
    for (int c = 0; c < classes; ++c) {
      for (int u = 0; u < upper; ++u)
        if (coin(rng)) neighborhood[c].push_back(u);
      if (neighborhood[c].empty()) neighborhood[c].push_back(upper - 1);
    }
    std::vector<std::pair<int, int>> arcs;
    for (int l = 0; l < lower; ++l)
      for (int u : neighborhood[l % classes]) arcs.push_back({u, l});

    Graph g = testutil::bilayer(upper, lower, arcs);
    auto [phase, layering] = insert_dummies(g, assign_layers(g));

    std::size_t minimum = SIZE_MAX;
    std::size_t worst_minimal_inversions = 0;
    std::size_t minimal_orders = 0;
    for (const auto& up : permutations(upper)) {
      std::vector<int> upos(upper);
      for (int k = 0; k < upper; ++k) upos[up[k]] = k;
      for (const auto& lo : permutations(lower)) {
        std::vector<int> lpos(lower);
        for (int k = 0; k < lower; ++k) lpos[lo[k]] = k;
        std::size_t c = testutil::brute_force_crossings(arcs, upos, lpos);
        std::size_t inv = kendall_inversions(up) + kendall_inversions(lo);
        if (c < minimum) {
          minimum = c;
          worst_minimal_inversions = inv;
          minimal_orders = 1;
        } else if (c == minimum) {
          worst_minimal_inversions = std::max(worst_minimal_inversions, inv);
          ++minimal_orders;
        }
      }
    }
    if (minimal_orders > 1) ++multi_minimum_instances;

    CrossMinOptions options;
    options.strategy = CrossMinStrategy::BarycenterMo;
    LayerOrders got = minimize_crossings(phase, layering, options);
    std::size_t got_inv = model_order_inversions(phase, got.layers, false);
    if (got_inv > worst_minimal_inversions)
      return {false, "tie-break wasted inversions at instance " +
                         std::to_string(i) + " (" + std::to_string(got_inv) +
                         " > " + std::to_string(worst_minimal_inversions) + ")"};

    options.strategy = CrossMinStrategy::StrictMo;
    LayerOrders strict = minimize_crossings(phase, layering, options);
    if (model_order_inversions(phase, strict.layers, false) != 0)
      return {false, "strict order has inversions at instance " +
                         std::to_string(i)};
  }
  if (multi_minimum_instances < 150)
    return {false, "construction failed: only " +
                       std::to_string(multi_minimum_instances) +
                       " instances had multiple minima"};
  std::ostringstream d;
  d << "200 instances, " << multi_minimum_instances << " with multiple minima";
  return {true, d.str()};
}

// ------------------------------------------------------------- statechart ---

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph chart_graph(const std::string& name) {
  return dsl_to_graph(parse_dsl(slurp(fixture(name))));
}

// 5. The source order of the four-state chart drives the drawing: layer order
//    follows declaration, exactly the loop-back edge is reversed, and the
//    initial state's transitions carry their 1-based priorities.
Outcome check_statechart_reproduction() {
  LayoutResult a = run_layout(chart_graph("send_first.chart"), default_config(InputKind::Dsl));
  if (a.level.reversed_edges != std::vector<std::string>{"Done#0"})
    return {false, "expected exactly the loop-back reversal in the original order"};
  const auto& la = a.level.layering.layer_of;
  if (!(la.at("Start") == 0 && la.at("Send") == 1 && la.at("Receive") == 2 &&
        la.at("Done") == 3))
    return {false, "layer assignment does not follow declaration"};
  std::string svg = emit_svg(a.geometry, a.graph.direction, SvgOptions{});
  if (svg.find("class=\"priority\">1</text>") == std::string::npos ||
      svg.find("class=\"priority\">2</text>") == std::string::npos)
    return {false, "priority labels 1 and 2 missing from the drawing"};

  LayoutResult c = run_layout(chart_graph("receive_first.chart"), default_config(InputKind::Dsl));
  const auto& lc = c.level.layering.layer_of;
  if (!(lc.at("Receive") < lc.at("Send")))
    return {false, "declaring Receive first should pull it above Send"};
  // The swap makes Send->Receive declaration-backward, so it is reversed
  // alongside the loop-back; no unrelated edge flips.
  if (c.level.reversed_edges != std::vector<std::string>{"Send#0", "Done#0"})
    return {false, "swapping declarations changed an unrelated reversal"};
  return {true, "layout follows the declarations in both variants"};
}

// 6. A witness instance where the plain sweep abandons declaration order with
//    no crossing gain, while the tie-breaking sweep preserves it.
Outcome check_order_preservation_witness() {
  auto evaluate = [](const Graph& g, CrossMinStrategy strategy,
                     std::size_t& crossings, std::size_t& inversions) {
    auto [phase, layering] = insert_dummies(g, assign_layers(g));
    CrossMinOptions options;
    options.strategy = strategy;
    LayerOrders orders = minimize_crossings(phase, layering, options);
    crossings = count_crossings(phase, layering, orders);
    inversions = model_order_inversions(phase, orders.layers, false);
  };

  for (unsigned seed = 0; seed < 4000; ++seed) {
    std::mt19937 rng(seed);
    Graph g = testutil::random_graph(rng, 8, 14, false);
    if (!is_acyclic_ignoring_self_loops(g)) continue;
    std::size_t plain_cross = 0, plain_inv = 0, mo_cross = 0, mo_inv = 0;
    evaluate(g, CrossMinStrategy::Barycenter, plain_cross, plain_inv);
    evaluate(g, CrossMinStrategy::BarycenterMo, mo_cross, mo_inv);
    if (plain_inv > 0 && mo_inv == 0 && mo_cross <= plain_cross) {
      std::ostringstream d;
      d << "seed " << seed << ": plain has " << plain_inv
        << " inversion(s) at " << plain_cross
        << " crossings; tie-break has 0 at " << mo_cross;
      return {true, d.str()};
    }
  }
  return {false, "no witness instance in 4000 seeded graphs"};
}

// 7. Appending one declaration-forward edge never flips existing reversals or
//    the relative order of surviving same-layer pairs.
Outcome check_edit_stability() {
  std::mt19937 rng(1007);
  std::uniform_int_distribution<int> nodes(3, 12);
  LayoutConfig config = default_config(InputKind::Dsl);
  config.cycle_breaking = CycleBreakStrategy::StrictMo;
  config.crossing_min = CrossMinStrategy::StrictMo;

  int effective = 0;
  for (int i = 0; i < 200; ++i) {
    int n = nodes(rng);
    std::set<std::pair<int, int>> present;
    std::uniform_int_distribution<int> pick(0, n - 1);
    int m = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    for (int k = 0; k < m; ++k) {
      int a = pick(rng), b = pick(rng);
      if (a == b) continue;
      present.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::pair<int, int>> arcs(present.begin(), present.end());
    Graph before = testutil::simple_graph(n, arcs);

    std::vector<std::pair<int, int>> absent;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!present.count({a, b})) absent.push_back({a, b});
    if (absent.empty()) continue;
    ++effective;
    auto [s, t] = absent[std::uniform_int_distribution<std::size_t>(
        0, absent.size() - 1)(rng)];

    Graph after = before;
    after.edges.push_back(testutil::edge("added", "n" + std::to_string(s),
                                         "n" + std::to_string(t),
                                         static_cast<int>(arcs.size())));

    LayoutResult rb = run_layout(before, config);
    LayoutResult ra = run_layout(after, config);
    if (!rb.level.reversed_edges.empty() || !ra.level.reversed_edges.empty())
      return {false, "forward-only graph produced a reversal at instance " +
                         std::to_string(i)};
    auto report = stability_distance(stability_input(rb), stability_input(ra));
    if (!report)
      return {false, "no shared nodes at instance " + std::to_string(i)};
    if (report->order_flips != 0)
      return {false, std::to_string(report->order_flips) +
                         " order flip(s) after adding one edge at instance " +
                         std::to_string(i)};
  }
  std::ostringstream d;
  d << effective << "/200 instances had room for an extra edge; zero flips";
  return {true, d.str()};
}

// 8. A compound with fixed port order exposes the same external port order no
//    matter how the edges inside or around it are declared.
Outcome check_fixed_port_order_invariance() {
  auto build = [](bool swap_child_edges, bool swap_parent_edges) {
    Graph child;
    child.nodes.push_back(testutil::node("x", 0));
    child.nodes.push_back(testutil::node("y", 1));
    child.nodes.push_back(testutil::node("z", 2));
    std::vector<std::pair<std::string, std::string>> child_arcs = {
        {"x", "y"}, {"x", "z"}, {"y", "z"}};
    if (swap_child_edges) std::swap(child_arcs[0], child_arcs[1]);
    for (std::size_t k = 0; k < child_arcs.size(); ++k)
      child.edges.push_back(testutil::edge("c" + std::to_string(k),
                                           child_arcs[k].first,
                                           child_arcs[k].second,
                                           static_cast<int>(k)));

    Graph g;
    Node cluster = testutil::node("cluster", 0);
    cluster.fixed_port_order = true;
    cluster.ports.push_back({"in_w", "cluster", PortSide::West, 0, PortOrigin::Explicit});
    cluster.ports.push_back({"out_a", "cluster", PortSide::East, 1, PortOrigin::Explicit});
    cluster.ports.push_back({"out_b", "cluster", PortSide::East, 2, PortOrigin::Explicit});
    cluster.children.push_back(child);
    g.nodes.push_back(cluster);
    g.nodes.push_back(testutil::node("left", 1));
    g.nodes.push_back(testutil::node("right", 2));

    struct Arc {
      std::string id, s, t;
      std::optional<std::string> sp, tp;
    };
    std::vector<Arc> arcs = {
        {"e_a", "cluster", "left", std::string("out_a"), std::nullopt},
        {"e_b", "cluster", "right", std::string("out_b"), std::nullopt},
    };
    if (swap_parent_edges) std::swap(arcs[0], arcs[1]);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      Edge e = testutil::edge(arcs[k].id, arcs[k].s, arcs[k].t,
                              static_cast<int>(k));
      e.source_port = arcs[k].sp;
      e.target_port = arcs[k].tp;
      g.edges.push_back(e);
    }
    return g;
  };

  auto external_ports = [](const LayoutResult& r) {
    const NodePortOrder& p = r.level.orders.ports.at("cluster");
    std::string joined;
    for (const auto& side : {p.north, p.east, p.south, p.west})
      for (const std::string& id : side) joined += id + "|";
    return joined;
  };

  LayoutConfig config = default_config(InputKind::Json);
  std::string base = external_ports(run_layout(build(false, false), config));
  std::string child_swapped = external_ports(run_layout(build(true, false), config));
  std::string parent_swapped = external_ports(run_layout(build(false, true), config));
  if (base != child_swapped)
    return {false, "child edge declaration order leaked into the port order"};
  if (base != parent_swapped)
    return {false, "parent edge declaration order leaked into the port order"};
  if (base.find("out_a|out_b") == std::string::npos)
    return {false, "external ports not in declared order: " + base};
  return {true, "port order '" + base + "' invariant under edge permutations"};
}

// 9. Ten repeated CLI runs per fixture produce byte-identical artifacts.
Outcome check_cli_determinism() {
  const std::string cli = LAYOUT_CLI_PATH;
  auto tmp = std::filesystem::temp_directory_path();
  std::vector<std::string> fixtures = {
      "send_first.chart", "receive_first.chart", "nested.chart",   "minimal.chart",
      "dataflow.json", "cycles.json", "hierarchy.json", "lenient.json"};
  for (const std::string& name : fixtures) {
    std::string first_svg, first_json, first_out;
    for (int run = 0; run < 10; ++run) {
      auto svg = tmp / ("strata_acc_" + std::to_string(run) + ".svg");
      auto json = tmp / ("strata_acc_" + std::to_string(run) + ".json");
      auto out = tmp / "strata_acc_out.txt";
      std::string cmd = cli + " " + fixture(name) + " --svg " + svg.string() +
                        " --json " + json.string() + " --metrics --explain > " +
                        out.string() + " 2> /dev/null";
      int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        return {false, name + ": exit " + std::to_string(WEXITSTATUS(status))};
      std::string svg_text = slurp(svg.string());
      std::string json_text = slurp(json.string());
      std::string out_text = slurp(out.string());
      if (run == 0) {
        first_svg = svg_text;
        first_json = json_text;
        first_out = out_text;
      } else if (svg_text != first_svg || json_text != first_json ||
                 out_text != first_out) {
        return {false, name + ": run " + std::to_string(run) + " differs"};
      }
    }
  }
  return {true, std::to_string(fixtures.size()) + " fixtures x 10 runs identical"};
}

// 10. Generated chart corpus: model order is exactly declaration order, and
//     malformed charts report their line and column.
Outcome check_dsl_order_and_errors() {
  std::mt19937 rng(1010);
  std::uniform_int_distribution<int> nstates(1, 12);
  std::uniform_int_distribution<int> ntrans(0, 3);
  std::uniform_int_distribution<int> percent(0, 99);

  for (int i = 0; i < 50; ++i) {
    int k = nstates(rng);
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::ostringstream text;
    text << "chart G" << i << " {\n";
    std::vector<std::vector<int>> targets(k);
    for (int s = 0; s < k; ++s) {
      int t = ntrans(rng);
      for (int j = 0; j < t; ++j) targets[s].push_back(pick(rng));
      text << "  " << (s == 0 && percent(rng) < 50 ? "initial " : "")
           << "state S" << s << " {";
      if (targets[s].empty()) {
        text << " }\n";
        continue;
      }
      text << "\n";
      for (std::size_t j = 0; j < targets[s].size(); ++j) {
        text << "    -> S" << targets[s][j];
        if (percent(rng) < 30) text << " [g" << j << "]";
        text << "\n";
      }
      text << "  }\n";
    }
    text << "}\n";

    Graph g;
    try {
      g = dsl_to_graph(parse_dsl(text.str()));
    } catch (const ParseError& err) {
      return {false, "generated chart " + std::to_string(i) +
                         " failed to parse: " + err.what()};
    }
    if (static_cast<int>(g.nodes.size()) != k)
      return {false, "state count mismatch in chart " + std::to_string(i)};
    for (int s = 0; s < k; ++s) {
      if (g.nodes[s].id != "S" + std::to_string(s) || g.nodes[s].model_order != s)
        return {false, "node order does not follow declaration in chart " +
                           std::to_string(i)};
    }
    int expected_order = 0;
    std::vector<const Edge*> by_order(g.edges.size(), nullptr);
    for (const Edge& e : g.edges) {
      if (e.model_order < 0 ||
          e.model_order >= static_cast<int>(g.edges.size()))
        return {false, "edge order out of range in chart " + std::to_string(i)};
      by_order[e.model_order] = &e;
    }
    for (int s = 0; s < k; ++s)
      for (std::size_t j = 0; j < targets[s].size(); ++j) {
        const Edge* e = by_order[expected_order];
        if (!e || e->source != "S" + std::to_string(s) ||
            e->target != "S" + std::to_string(targets[s][j]) ||
            e->id != "S" + std::to_string(s) + "#" + std::to_string(j))
          return {false, "edge order does not follow declaration in chart " +
                             std::to_string(i)};
        ++expected_order;
      }
  }

  struct Bad {
    const char* text;
    int line;
  };
  std::vector<Bad> bad = {
      {"graph M { }", 1},
      {"chart M { initial state A { } state B { }\nA -> B }", 2},
      {"chart M {\n  state A { }\n  state A { }\n}", 3},
      {"chart M {\n  state A { -> Ghost }\n}", 2},
      {"chart M {\n  state A { -> A [oops\n}", 2},
  };
  for (std::size_t i = 0; i < bad.size(); ++i) {
    try {
      parse_dsl(bad[i].text);
      return {false, "malformed chart " + std::to_string(i) + " was accepted"};
    } catch (const ParseError& err) {
      if (err.line != bad[i].line || err.col < 1)
        return {false, "wrong position for malformed chart " +
                           std::to_string(i) + ": line " +
                           std::to_string(err.line) + ", col " +
                           std::to_string(err.col)};
    }
  }
  return {true, "50 generated charts in declaration order; 5 errors located"};
}

}  // namespace

int main() {
  struct Check {
    const char* label;
    Outcome (*fn)();
  };
  std::vector<Check> checks = {
      {"cycle breaking leaves random graphs acyclic", check_acyclic_strategies},
      {"strict reversal set matches the declaration-backward set",
       check_strict_reversal_set},
      {"crossing counts are exact and sweeps are bounded", check_crossing_counts},
      {"tie-breaks stay within the worst minimal order's inversions",
       check_inversions_among_minima},
      {"the four-state chart reproduces its declared structure",
       check_statechart_reproduction},
      {"tie-breaking preserves declaration order where plain drifts",
       check_order_preservation_witness},
      {"adding a forward edge never flips existing order", check_edit_stability},
      {"fixed port order is invariant under edge permutations",
       check_fixed_port_order_invariance},
      {"cli artifacts are byte-identical across repeated runs",
       check_cli_determinism},
      {"dsl model order mirrors declaration; errors carry positions",
       check_dsl_order_and_errors},
  };

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Outcome outcome;
    try {
      outcome = checks[i].fn();
    } catch (const std::exception& err) {
      outcome = {false, std::string("exception: ") + err.what()};
    }
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << (i + 1) << ". "
              << checks[i].label;
    if (!outcome.detail.empty()) std::cout << " — " << outcome.detail;
    std::cout << "\n";
    if (!outcome.pass) ++failures;
  }
  if (failures) std::cout << failures << " of 10 checks failed\n";
  return failures == 0 ? 0 : 1;
}
