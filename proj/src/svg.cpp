#include "strata/svg.hpp"

#include <cstdio>
#include <sstream>

namespace strata {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void emit_level(std::ostringstream& out, const CanvasLayout& layout,
                Direction direction, const SvgOptions& options,
                const std::string& indent) {
  for (const std::string& id : layout.node_order) {
    const PlacedNode& n = layout.nodes.at(id);
    const Rect& r = n.rect;
    bool compound = layout.children.count(id) > 0;
    out << indent << "<rect x=\"" << num(r.x) << "\" y=\"" << num(r.y)
        << "\" width=\"" << num(r.width) << "\" height=\"" << num(r.height)
        << "\" rx=\"3\" class=\"" << (compound ? "compound" : "node") << "\"/>\n";
    if (compound) {
      out << indent << "<text x=\"" << num(r.x + r.width / 2) << "\" y=\""
          << num(r.y + kCompoundHeader - 6) << "\" class=\"label\">"
          << escape(id) << "</text>\n";
      out << indent << "<g transform=\"translate(" << num(r.x + kCompoundPad)
          << "," << num(r.y + kCompoundHeader) << ")\">\n";
      emit_level(out, layout.children.at(id), direction, options, indent + "  ");
      out << indent << "</g>\n";
    } else {
      out << indent << "<text x=\"" << num(r.x + r.width / 2) << "\" y=\""
          << num(r.y + r.height / 2 + options.font_size / 3)
          << "\" class=\"label\">" << escape(id) << "</text>\n";
    }
    if (n.kind == "initial") {
      Point tip, dot;
      if (direction == Direction::Right) {
        tip = {r.x, r.y + r.height / 2};
        dot = {r.x - kConnectorSpace, tip.y};
      } else {
        tip = {r.x + r.width / 2, r.y};
        dot = {tip.x, r.y - kConnectorSpace};
      }
      out << indent << "<circle cx=\"" << num(dot.x) << "\" cy=\"" << num(dot.y)
          << "\" r=\"3.5\" class=\"entry\"/>\n";
      out << indent << "<polyline points=\"" << num(dot.x) << "," << num(dot.y)
          << " " << num(tip.x) << "," << num(tip.y)
          << "\" class=\"edge\" marker-end=\"url(#arrow)\"/>\n";
    }
    if (options.show_port_dots) {
      for (const auto& [pid, anchor] : n.ports)
        out << indent << "<circle cx=\"" << num(anchor.at.x) << "\" cy=\""
            << num(anchor.at.y) << "\" r=\"1.5\" class=\"port\"/>\n";
    }
  }

  for (const RoutedEdge& e : layout.edges) {
    out << indent << "<polyline points=\"";
    for (std::size_t i = 0; i < e.points.size(); ++i) {
      if (i) out << " ";
      out << num(e.points[i].x) << "," << num(e.points[i].y);
    }
    out << "\" class=\"edge" << (e.reversed ? " reversed" : "")
        << "\" marker-end=\"url(#arrow)\"/>\n";
    if (e.priority_label) {
      out << indent << "<text x=\"" << num(e.label_at.x) << "\" y=\""
          << num(e.label_at.y) << "\" class=\"priority\">" << *e.priority_label
          << "</text>\n";
    }
  }
}

}  // namespace

std::string emit_svg(const CanvasLayout& layout, Direction direction,
                     const SvgOptions& options) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << num(layout.width) << "\" height=\"" << num(layout.height)
      << "\" viewBox=\"0 0 " << num(layout.width) << " " << num(layout.height)
      << "\">\n";
  out << "  <defs>\n"
         "    <marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"6\" "
         "refX=\"7\" refY=\"3\" orient=\"auto\" markerUnits=\"userSpaceOnUse\">\n"
         "      <path d=\"M0,0 L8,3 L0,6 z\" fill=\"#333333\"/>\n"
         "    </marker>\n"
         "    <style>\n"
         "      rect.node { fill: #f5f7fa; stroke: #444444; }\n"
         "      rect.compound { fill: #eef1f5; stroke: #444444; }\n"
         "      text.label { font-family: monospace; font-size: "
      << num(options.font_size)
      << "px; text-anchor: middle; }\n"
         "      text.priority { font-family: monospace; font-size: "
      << num(options.font_size * 0.9)
      << "px; text-anchor: middle; }\n"
         "      polyline.edge { fill: none; stroke: #333333; }\n"
         "      circle.entry { fill: #333333; }\n"
         "      circle.port { fill: #666666; }\n"
         "    </style>\n"
         "  </defs>\n";
  emit_level(out, layout, direction, options, "  ");
  out << "</svg>\n";
  return out.str();
}

}  // namespace strata
