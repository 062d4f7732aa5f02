#pragma once

#include <string>

#include "strata/geometry.hpp"
#include "strata/graph.hpp"

namespace strata {

struct SvgOptions {
  double font_size = 10.0;
  bool show_port_dots = true;
};

// Renders a layout tree as SVG 1.1: one rect per real node (nested for
// compounds), one polyline per edge with an arrowhead at the declared
// target, centered id labels, priority labels near source anchors, and an
// entry connector (dot + arrow) at nodes of kind "initial". Output is byte
// deterministic: fixed-precision numbers, elements in model order.
std::string emit_svg(const CanvasLayout& layout, Direction direction,
                     const SvgOptions& options = {});

}  // namespace strata
