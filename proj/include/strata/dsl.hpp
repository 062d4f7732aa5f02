#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/graph.hpp"

namespace strata {

// Parsed form of the statechart text. Declaration order is preserved; it is
// the model order the layout phases consume.
struct DslTransition {
  std::string target;
  std::optional<std::string> guard;  // opaque text, not interpreted
  int line = 0;
  int col = 0;
};

struct DslState {
  std::string name;
  bool initial = false;
  std::vector<DslTransition> transitions;  // declaration order
  std::vector<DslState> states;            // nested states, declaration order
  int line = 0;
  int col = 0;
};

struct DslModel {
  std::string name;
  std::vector<DslState> states;  // declaration order

  bool operator==(const DslModel&) const;
};

// Grammar:
//   chart      ::= "chart" IDENT "{" state* "}"
//   state      ::= ["initial"] "state" IDENT ["{" (state | transition)* "}"]
//   transition ::= "->" IDENT ["[" guard-text "]"]
// "//" starts a line comment. Transition targets are sibling states; forward
// references are resolved after parsing. Throws ParseError with line/column.
DslModel parse_dsl(const std::string& text);

// Canonical printer; parse_dsl(print_dsl(m)) == m.
std::string print_dsl(const DslModel& model);

// Lowers the parsed model to a graph: states become nodes in declaration
// order, transitions become edges ordered by (source declaration, local
// declaration index), priority labels are 1-based local indices, and every
// endpoint gets an implicit port. Direction defaults to Down.
Graph dsl_to_graph(const DslModel& model);

}  // namespace strata
