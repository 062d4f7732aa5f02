#pragma once

#include <optional>
#include <string>

#include "strata/crossing_min.hpp"
#include "strata/cycle_breaking.hpp"
#include "strata/geometry.hpp"
#include "strata/graph.hpp"

namespace strata {

enum class InputKind { Dsl, Json };

// Full strategy configuration; every field has a total default that depends
// only on the input kind (statechart profile for DSL, dataflow profile for
// JSON).
struct LayoutConfig {
  CycleBreakStrategy cycle_breaking = CycleBreakStrategy::StrictMo;
  CrossMinStrategy crossing_min = CrossMinStrategy::BarycenterMo;
  PortPolicy port_policy = PortPolicy::DerivedFromEdges;
  DummyRule dummy_rule = DummyRule::FirstConnection;
  bool group_restricted = false;
  Direction direction = Direction::Down;
  Spacing spacing;
  unsigned seed = 0;

  bool operator==(const LayoutConfig&) const = default;
};

LayoutConfig default_config(InputKind kind);

// Partially-specified configuration (a config file or a set of flags);
// applying it overrides only the fields present.
struct ConfigOverlay {
  std::optional<CycleBreakStrategy> cycle_breaking;
  std::optional<CrossMinStrategy> crossing_min;
  std::optional<PortPolicy> port_policy;
  std::optional<DummyRule> dummy_rule;
  std::optional<bool> group_restricted;
  std::optional<Direction> direction;
  std::optional<double> node_spacing;
  std::optional<double> layer_spacing;
  std::optional<double> margin;
  std::optional<unsigned> seed;

  void apply(LayoutConfig& config) const;
};

// JSON config file: an object with any of the keys cycleBreaking,
// crossingMin, portOrder, dummyRule, groupRestricted, direction, nodeSpacing,
// layerSpacing, margin, seed. Unknown keys throw SchemaError.
ConfigOverlay parse_config_file(const std::string& text);
std::string config_to_json(const LayoutConfig& config);

// Flag spellings shared by the CLI and the config file.
std::string to_string(CycleBreakStrategy v);
std::string to_string(CrossMinStrategy v);
std::string to_string(PortPolicy v);
std::string to_string(DummyRule v);
std::string to_string(Direction v);
std::optional<CycleBreakStrategy> cycle_breaking_from_string(const std::string& s);
std::optional<CrossMinStrategy> crossing_min_from_string(const std::string& s);
std::optional<PortPolicy> port_policy_from_string(const std::string& s);
std::optional<DummyRule> dummy_rule_from_string(const std::string& s);
std::optional<Direction> direction_from_string(const std::string& s);

}  // namespace strata
