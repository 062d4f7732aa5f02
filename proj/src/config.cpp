#include "strata/config.hpp"

#include "json.hpp"
#include "strata/errors.hpp"

namespace strata {

LayoutConfig default_config(InputKind kind) {
  LayoutConfig c;
  if (kind == InputKind::Dsl) {
    c.cycle_breaking = CycleBreakStrategy::StrictMo;
    c.port_policy = PortPolicy::DerivedFromEdges;
    c.direction = Direction::Down;
    c.group_restricted = false;
  } else {
    c.cycle_breaking = CycleBreakStrategy::DepthFirstMo;
    c.port_policy = PortPolicy::FixedModelOrder;
    c.direction = Direction::Right;
    c.group_restricted = true;
  }
  c.crossing_min = CrossMinStrategy::BarycenterMo;
  c.dummy_rule = DummyRule::FirstConnection;
  return c;
}

void ConfigOverlay::apply(LayoutConfig& config) const {
  if (cycle_breaking) config.cycle_breaking = *cycle_breaking;
  if (crossing_min) config.crossing_min = *crossing_min;
  if (port_policy) config.port_policy = *port_policy;
  if (dummy_rule) config.dummy_rule = *dummy_rule;
  if (group_restricted) config.group_restricted = *group_restricted;
  if (direction) config.direction = *direction;
  if (node_spacing) config.spacing.node = *node_spacing;
  if (layer_spacing) config.spacing.layer = *layer_spacing;
  if (margin) config.spacing.margin = *margin;
  if (seed) config.seed = *seed;
}

std::string to_string(CycleBreakStrategy v) {
  switch (v) {
    case CycleBreakStrategy::Greedy: return "greedy";
    case CycleBreakStrategy::DepthFirstMo: return "depth-first-mo";
    case CycleBreakStrategy::StrictMo: return "strict-mo";
    case CycleBreakStrategy::SccMo: return "scc-mo";
  }
  return "";
}
std::string to_string(CrossMinStrategy v) {
  switch (v) {
    case CrossMinStrategy::Barycenter: return "barycenter";
    case CrossMinStrategy::BarycenterMo: return "barycenter-mo";
    case CrossMinStrategy::StrictMo: return "strict-mo";
  }
  return "";
}
std::string to_string(PortPolicy v) {
  return v == PortPolicy::DerivedFromEdges ? "derived" : "fixed";
}
std::string to_string(DummyRule v) {
  return v == DummyRule::FirstConnection ? "first" : "all";
}
std::string to_string(Direction v) {
  return v == Direction::Right ? "right" : "down";
}

std::optional<CycleBreakStrategy> cycle_breaking_from_string(const std::string& s) {
  if (s == "greedy") return CycleBreakStrategy::Greedy;
  if (s == "depth-first-mo") return CycleBreakStrategy::DepthFirstMo;
  if (s == "strict-mo") return CycleBreakStrategy::StrictMo;
  if (s == "scc-mo") return CycleBreakStrategy::SccMo;
  return std::nullopt;
}
std::optional<CrossMinStrategy> crossing_min_from_string(const std::string& s) {
  if (s == "barycenter") return CrossMinStrategy::Barycenter;
  if (s == "barycenter-mo") return CrossMinStrategy::BarycenterMo;
  if (s == "strict-mo") return CrossMinStrategy::StrictMo;
  return std::nullopt;
}
std::optional<PortPolicy> port_policy_from_string(const std::string& s) {
  if (s == "derived") return PortPolicy::DerivedFromEdges;
  if (s == "fixed") return PortPolicy::FixedModelOrder;
  return std::nullopt;
}
std::optional<DummyRule> dummy_rule_from_string(const std::string& s) {
  if (s == "first") return DummyRule::FirstConnection;
  if (s == "all") return DummyRule::AllConnections;
  return std::nullopt;
}
std::optional<Direction> direction_from_string(const std::string& s) {
  if (s == "right") return Direction::Right;
  if (s == "down") return Direction::Down;
  return std::nullopt;
}

namespace {

template <typename T>
T parse_enum(const nlohmann::json& j, const char* key,
             std::optional<T> (*from)(const std::string&)) {
  std::string s = j.get<std::string>();
  auto v = from(s);
  if (!v) throw SchemaError(key, "invalid value '" + s + "'");
  return *v;
}

}  // namespace

ConfigOverlay parse_config_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw SchemaError("$", err.what());
  }
  if (!j.is_object()) throw SchemaError("$", "config must be an object");

  ConfigOverlay o;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "cycleBreaking")
      o.cycle_breaking = parse_enum(*it, "cycleBreaking", cycle_breaking_from_string);
    else if (key == "crossingMin")
      o.crossing_min = parse_enum(*it, "crossingMin", crossing_min_from_string);
    else if (key == "portOrder")
      o.port_policy = parse_enum(*it, "portOrder", port_policy_from_string);
    else if (key == "dummyRule")
      o.dummy_rule = parse_enum(*it, "dummyRule", dummy_rule_from_string);
    else if (key == "groupRestricted")
      o.group_restricted = it->get<bool>();
    else if (key == "direction")
      o.direction = parse_enum(*it, "direction", direction_from_string);
    else if (key == "nodeSpacing")
      o.node_spacing = it->get<double>();
    else if (key == "layerSpacing")
      o.layer_spacing = it->get<double>();
    else if (key == "margin")
      o.margin = it->get<double>();
    else if (key == "seed")
      o.seed = it->get<unsigned>();
    else
      throw SchemaError(key, "unknown config key");
  }
  return o;
}

std::string config_to_json(const LayoutConfig& config) {
  nlohmann::ordered_json j;
  j["cycleBreaking"] = to_string(config.cycle_breaking);
  j["crossingMin"] = to_string(config.crossing_min);
  j["portOrder"] = to_string(config.port_policy);
  j["dummyRule"] = to_string(config.dummy_rule);
  j["groupRestricted"] = config.group_restricted;
  j["direction"] = to_string(config.direction);
  j["nodeSpacing"] = config.spacing.node;
  j["layerSpacing"] = config.spacing.layer;
  j["margin"] = config.spacing.margin;
  j["seed"] = config.seed;
  return j.dump(2) + "\n";
}

}  // namespace strata
