#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strata/config.hpp"
#include "strata/dsl.hpp"
#include "strata/errors.hpp"
#include "strata/json_io.hpp"
#include "strata/metrics.hpp"
#include "strata/pipeline.hpp"
#include "strata/svg.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw strata::InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw strata::InputError("cannot write '" + path + "'");
  out << content;
}

struct LoadedInput {
  strata::Graph graph;
  strata::InputKind kind;
};

LoadedInput load_input(const std::string& path, bool strict_schema) {
  std::filesystem::path p(path);
  std::string text = read_file(path);
  if (p.extension() == ".chart") {
    try {
      strata::DslModel model = strata::parse_dsl(text);
      return {strata::dsl_to_graph(model), strata::InputKind::Dsl};
    } catch (const strata::ParseError& err) {
      throw strata::InputError(path + ": " + err.what());
    }
  }
  if (p.extension() == ".json") {
    std::vector<std::string> warnings;
    try {
      strata::Graph g = strata::parse_json_graph(text, strict_schema, &warnings);
      for (const std::string& w : warnings)
        std::cerr << path << ": warning: " << w << "\n";
      return {std::move(g), strata::InputKind::Json};
    } catch (const strata::SchemaError& err) {
      throw strata::InputError(path + ": " + err.what());
    }
  }
  throw strata::InputError(path + ": unsupported input extension (expected .chart or .json)");
}

template <typename T>
T parse_choice(const std::string& flag, const std::string& value,
               std::optional<T> (*from)(const std::string&)) {
  auto v = from(value);
  if (!v)
    throw strata::InputError("invalid value '" + value + "' for " + flag);
  return *v;
}

int run(int argc, char** argv) {
  CLI::App app{"Layered graph layout driven by model order"};
  app.get_formatter()->column_width(34);

  std::vector<std::string> inputs;
  app.add_option("inputs", inputs, "Input files (.chart or .json)")
      ->expected(1, 2)
      ->required();

  std::string cycle_breaking, crossing_min, port_order, dummy_rule, direction;
  std::optional<bool> group_restricted;
  std::optional<double> node_spacing, layer_spacing, margin;
  std::optional<unsigned> seed;
  std::string svg_path, json_path, config_path;
  bool metrics = false, stability = false, explain = false, strict_schema = false;

  app.add_option("--cycle-breaking", cycle_breaking,
                 "greedy | depth-first-mo | strict-mo | scc-mo");
  app.add_option("--crossing-min", crossing_min,
                 "barycenter | barycenter-mo | strict-mo");
  app.add_option("--port-order", port_order, "derived | fixed");
  app.add_option("--dummy-rule", dummy_rule, "first | all");
  app.add_option("--group-restricted", group_restricted, "true | false");
  app.add_option("--direction", direction, "right | down");
  app.add_option("--node-spacing", node_spacing, "In-layer spacing");
  app.add_option("--layer-spacing", layer_spacing, "Between-layer spacing");
  app.add_option("--margin", margin, "Canvas margin");
  app.add_option("--seed", seed, "Random seed (recorded in config)");
  app.add_option("--svg", svg_path, "Write SVG to PATH");
  app.add_option("--json", json_path, "Write layout JSON to PATH");
  app.add_option("--config", config_path, "JSON config file");
  app.add_flag("--metrics", metrics, "Print metrics table");
  app.add_flag("--stability", stability,
               "Compare two inputs and print a stability report");
  app.add_flag("--explain", explain, "Print the phase trace");
  app.add_flag("--strict-schema", strict_schema,
               "Reject unknown JSON fields instead of warning");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& err) {
    std::cerr << err.what() << "\n";
    return 1;
  }

  if (stability && inputs.size() != 2)
    throw strata::InputError("--stability requires exactly two inputs");
  if (!stability && inputs.size() != 1)
    throw strata::InputError("a second input is only allowed with --stability");

  strata::ConfigOverlay flags;
  if (!cycle_breaking.empty())
    flags.cycle_breaking = parse_choice("--cycle-breaking", cycle_breaking,
                                        strata::cycle_breaking_from_string);
  if (!crossing_min.empty())
    flags.crossing_min = parse_choice("--crossing-min", crossing_min,
                                      strata::crossing_min_from_string);
  if (!port_order.empty())
    flags.port_policy =
        parse_choice("--port-order", port_order, strata::port_policy_from_string);
  if (!dummy_rule.empty())
    flags.dummy_rule =
        parse_choice("--dummy-rule", dummy_rule, strata::dummy_rule_from_string);
  if (!direction.empty())
    flags.direction =
        parse_choice("--direction", direction, strata::direction_from_string);
  flags.group_restricted = group_restricted;
  flags.node_spacing = node_spacing;
  flags.layer_spacing = layer_spacing;
  flags.margin = margin;
  flags.seed = seed;

  strata::ConfigOverlay file_overlay;
  if (!config_path.empty())
    file_overlay = strata::parse_config_file(read_file(config_path));

  auto layout_one = [&](const std::string& path) {
    LoadedInput loaded = load_input(path, strict_schema);
    strata::LayoutConfig config = strata::default_config(loaded.kind);
    config.direction = loaded.graph.direction;  // explicit input direction
    file_overlay.apply(config);
    flags.apply(config);
    return strata::run_layout(loaded.graph, config);
  };

  strata::LayoutResult result = layout_one(inputs[0]);

  // Build every output before writing anything, so failures leave no
  // partial artifacts behind.
  std::string stdout_text;
  if (stability) {
    strata::LayoutResult other = layout_one(inputs[1]);
    auto report = strata::stability_distance(strata::stability_input(result),
                                             strata::stability_input(other));
    if (!report) {
      stdout_text += "stability: undefined (no shared nodes)\n";
    } else {
      result.metrics.stability_displacement = report->mean_displacement;
      result.metrics.stability_order_flips = report->order_flips;
      result.metrics.stability_distance =
          report->mean_displacement + static_cast<double>(report->order_flips);
      std::ostringstream s;
      s << "stability distance  " << *result.metrics.stability_distance << "\n"
        << "mean displacement   " << report->mean_displacement << "\n"
        << "order flips         " << report->order_flips << "\n"
        << "shared nodes        " << report->shared_nodes << "\n";
      stdout_text += s.str();
    }
  }
  if (metrics) stdout_text += strata::metrics_table(result.metrics);
  if (explain) stdout_text += strata::explain_text(result);

  std::string svg_text, json_text;
  if (!svg_path.empty())
    svg_text = strata::emit_svg(result.geometry, result.config.direction);
  if (!json_path.empty())
    json_text = strata::emit_layout_json(result.graph, result.geometry);

  if (!svg_path.empty()) write_file(svg_path, svg_text);
  if (!json_path.empty()) write_file(json_path, json_text);
  std::cout << stdout_text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const strata::ParseError& err) {
    std::cerr << err.what() << "\n";
    return 1;
  } catch (const strata::SchemaError& err) {
    std::cerr << err.what() << "\n";
    return 1;
  } catch (const strata::InputError& err) {
    std::cerr << err.what() << "\n";
    return 1;
  } catch (const std::logic_error& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 2;
  }
}
