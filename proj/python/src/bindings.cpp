#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strata/config.hpp"
#include "strata/dsl.hpp"
#include "strata/errors.hpp"
#include "strata/json_io.hpp"
#include "strata/pipeline.hpp"
#include "strata/svg.hpp"

namespace py = pybind11;
using namespace strata;

namespace {

template <typename T>
void set_enum_property(std::optional<T> (*from)(const std::string&), T& field,
                       const std::string& value, const char* name) {
  auto v = from(value);
  if (!v)
    throw py::value_error("invalid " + std::string(name) + " '" + value + "'");
  field = *v;
}

py::dict metrics_dict(const MetricsReport& m) {
  py::dict d;
  d["crossings"] = m.crossings;
  d["backward_edges"] = m.backward_edges;
  d["node_inversions"] = m.node_inversions;
  d["edge_inversions"] = m.edge_inversions;
  d["layer_count"] = m.layer_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Layered graph layout driven by model order";

  py::register_exception<ParseError>(m, "DslParseError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<InputError>(m, "GraphInputError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("node_ids",
                             [](const Graph& g) {
                               std::vector<std::string> ids;
                               for (const Node& n : g.nodes) ids.push_back(n.id);
                               return ids;
                             })
      .def_property_readonly("edge_ids",
                             [](const Graph& g) {
                               std::vector<std::string> ids;
                               for (const Edge& e : g.edges) ids.push_back(e.id);
                               return ids;
                             })
      .def_property_readonly(
          "direction",
          [](const Graph& g) { return to_string(g.direction); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph nodes=" + std::to_string(g.nodes.size()) +
               " edges=" + std::to_string(g.edges.size()) + ">";
      });

  py::class_<LayoutConfig>(m, "LayoutConfig")
      .def(py::init<>())
      .def_property(
          "cycle_breaking",
          [](const LayoutConfig& c) { return to_string(c.cycle_breaking); },
          [](LayoutConfig& c, const std::string& v) {
            set_enum_property(cycle_breaking_from_string, c.cycle_breaking, v,
                              "cycle_breaking");
          })
      .def_property(
          "crossing_min",
          [](const LayoutConfig& c) { return to_string(c.crossing_min); },
          [](LayoutConfig& c, const std::string& v) {
            set_enum_property(crossing_min_from_string, c.crossing_min, v,
                              "crossing_min");
          })
      .def_property(
          "port_order",
          [](const LayoutConfig& c) { return to_string(c.port_policy); },
          [](LayoutConfig& c, const std::string& v) {
            set_enum_property(port_policy_from_string, c.port_policy, v,
                              "port_order");
          })
      .def_property(
          "dummy_rule",
          [](const LayoutConfig& c) { return to_string(c.dummy_rule); },
          [](LayoutConfig& c, const std::string& v) {
            set_enum_property(dummy_rule_from_string, c.dummy_rule, v,
                              "dummy_rule");
          })
      .def_property(
          "direction",
          [](const LayoutConfig& c) { return to_string(c.direction); },
          [](LayoutConfig& c, const std::string& v) {
            set_enum_property(direction_from_string, c.direction, v,
                              "direction");
          })
      .def_readwrite("group_restricted", &LayoutConfig::group_restricted)
      .def_readwrite("seed", &LayoutConfig::seed)
      .def_property(
          "node_spacing",
          [](const LayoutConfig& c) { return c.spacing.node; },
          [](LayoutConfig& c, double v) { c.spacing.node = v; })
      .def_property(
          "layer_spacing",
          [](const LayoutConfig& c) { return c.spacing.layer; },
          [](LayoutConfig& c, double v) { c.spacing.layer = v; })
      .def_property(
          "margin", [](const LayoutConfig& c) { return c.spacing.margin; },
          [](LayoutConfig& c, double v) { c.spacing.margin = v; });

  py::class_<LayoutResult>(m, "LayoutResult")
      .def("svg",
           [](const LayoutResult& r) {
             return emit_svg(r.geometry, r.config.direction);
           })
      .def("json",
           [](const LayoutResult& r) {
             return emit_layout_json(r.graph, r.geometry);
           })
      .def("explain", [](const LayoutResult& r) { return explain_text(r); })
      .def("metrics", [](const LayoutResult& r) { return metrics_dict(r.metrics); })
      .def_property_readonly(
          "layers", [](const LayoutResult& r) { return r.level.orders.layers; })
      .def_property_readonly("reversed_edges", [](const LayoutResult& r) {
        return r.level.reversed_edges;
      });

  m.def("default_config", [](const std::string& kind) {
    if (kind == "dsl") return default_config(InputKind::Dsl);
    if (kind == "json") return default_config(InputKind::Json);
    throw py::value_error("kind must be 'dsl' or 'json'");
  });
  m.def(
      "parse_dsl",
      [](const std::string& text) { return dsl_to_graph(parse_dsl(text)); },
      py::arg("text"));
  m.def(
      "parse_json",
      [](const std::string& text, bool strict) {
        return parse_json_graph(text, strict);
      },
      py::arg("text"), py::arg("strict") = true);
  m.def("layout", &run_layout, py::arg("graph"), py::arg("config"));
  m.def(
      "stability",
      [](const LayoutResult& a, const LayoutResult& b) -> py::object {
        auto report = stability_distance(stability_input(a), stability_input(b));
        if (!report) return py::none();
        py::dict d;
        d["mean_displacement"] = report->mean_displacement;
        d["order_flips"] = report->order_flips;
        d["shared_nodes"] = report->shared_nodes;
        return d;
      },
      py::arg("first"), py::arg("second"));
}
