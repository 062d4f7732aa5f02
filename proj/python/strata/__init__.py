"""Layered graph layout driven by model order."""

from ._core import (
    DslParseError,
    Graph,
    GraphInputError,
    LayoutConfig,
    LayoutResult,
    SchemaError,
    default_config,
    layout,
    parse_dsl,
    parse_json,
    stability,
)

__all__ = [
    "DslParseError",
    "Graph",
    "GraphInputError",
    "LayoutConfig",
    "LayoutResult",
    "SchemaError",
    "default_config",
    "layout",
    "parse_dsl",
    "parse_json",
    "stability",
]

__version__ = "0.1.0"
