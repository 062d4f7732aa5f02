"""Smoke tests for the python bindings: parse, layout, emit, compare."""

import pytest

import strata

CHART = """chart M {
  initial state Start {
    -> Send [a]
    -> Receive [b]
  }
  state Send { -> Receive }
  state Receive { -> Done }
  state Done { -> Start }
}
"""

JSON_GRAPH = """{
  "nodes": [{"id": "a"}, {"id": "b"}],
  "edges": [{"source": "a", "target": "b"}]
}"""


def test_parse_dsl_exposes_model_order():
    graph = strata.parse_dsl(CHART)
    assert graph.node_ids == ["Start", "Send", "Receive", "Done"]
    assert graph.edge_ids[0] == "Start#0"
    assert graph.direction == "down"


def test_parse_errors_are_python_exceptions():
    with pytest.raises(strata.DslParseError):
        strata.parse_dsl("chart M {\n  state A { }\n  state A { }\n}")
    with pytest.raises(ValueError):
        strata.parse_json('{"nodes": 5}')


def test_layout_produces_svg_json_and_metrics():
    graph = strata.parse_dsl(CHART)
    config = strata.default_config("dsl")
    result = strata.layout(graph, config)
    assert result.svg().startswith("<?xml")
    assert '"nodes"' in result.json()
    metrics = result.metrics()
    assert metrics["backward_edges"] == 1
    assert metrics["layer_count"] == 4
    assert result.reversed_edges == ["Done#0"]
    assert "== final orders ==" in result.explain()
    assert result.layers[0] == ["Start"]


def test_config_fields_are_strings():
    config = strata.default_config("json")
    assert config.cycle_breaking == "depth-first-mo"
    config.crossing_min = "barycenter"
    assert config.crossing_min == "barycenter"
    with pytest.raises(ValueError):
        config.crossing_min = "bogus"


def test_json_input_and_stability():
    graph = strata.parse_json(JSON_GRAPH)
    config = strata.default_config("json")
    first = strata.layout(graph, config)
    second = strata.layout(graph, config)
    report = strata.stability(first, second)
    assert report is not None
    assert report["mean_displacement"] == 0
    assert report["order_flips"] == 0
    assert report["shared_nodes"] == 2
