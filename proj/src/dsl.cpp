#include "strata/dsl.hpp"

#include <cctype>
#include <set>

#include "strata/errors.hpp"

namespace strata {

namespace {

bool transitions_equal(const std::vector<DslTransition>& a,
                       const std::vector<DslTransition>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].target != b[i].target || a[i].guard != b[i].guard) return false;
  return true;
}

bool states_equal(const std::vector<DslState>& a, const std::vector<DslState>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || a[i].initial != b[i].initial) return false;
    if (!transitions_equal(a[i].transitions, b[i].transitions)) return false;
    if (!states_equal(a[i].states, b[i].states)) return false;
  }
  return true;
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(line, col, message);
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (pos < text.size()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (pos < text.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  bool try_punct(const std::string& p) {
    skip_ws();
    if (text.compare(pos, p.size(), p) == 0) {
      for (std::size_t i = 0; i < p.size(); ++i) advance();
      return true;
    }
    return false;
  }

  void expect_punct(const std::string& p) {
    if (!try_punct(p)) fail("expected '" + p + "'");
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::optional<std::string> try_ident() {
    skip_ws();
    if (pos >= text.size() || !ident_start(peek())) return std::nullopt;
    std::string word;
    while (pos < text.size() && ident_char(peek())) word += advance();
    return word;
  }

  std::string expect_ident(const std::string& what) {
    auto word = try_ident();
    if (!word) fail("expected " + what);
    return *word;
  }

  // Consumes `word` only if it appears as a whole keyword.
  bool try_keyword(const std::string& word) {
    skip_ws();
    if (text.compare(pos, word.size(), word) != 0) return false;
    std::size_t after = pos + word.size();
    if (after < text.size() && ident_char(text[after])) return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  DslTransition parse_transition() {
    DslTransition t;
    skip_ws();
    t.line = line;
    t.col = col;
    expect_punct("->");
    t.target = expect_ident("transition target state name");
    skip_ws();
    int open_line = line, open_col = col;
    if (try_punct("[")) {
      std::string guard;
      while (pos < text.size() && peek() != ']') guard += advance();
      // Point at the opening '[' rather than wherever scanning ran out.
      if (pos >= text.size())
        throw ParseError(open_line, open_col, "unterminated guard, expected ']'");
      advance();  // ']'
      t.guard = guard;
    }
    return t;
  }

  DslState parse_state() {
    DslState s;
    skip_ws();
    s.line = line;
    s.col = col;
    if (try_keyword("initial")) s.initial = true;
    if (!try_keyword("state")) fail("expected 'state'");
    s.name = expect_ident("state name");
    skip_ws();
    if (try_punct("{")) {
      while (true) {
        skip_ws();
        if (try_punct("}")) break;
        if (pos >= text.size()) fail("unterminated state body, expected '}'");
        if (peek() == '-') {
          s.transitions.push_back(parse_transition());
        } else {
          s.states.push_back(parse_state());
        }
      }
    }
    return s;
  }

  DslModel parse_chart() {
    if (!try_keyword("chart")) fail("expected 'chart'");
    DslModel m;
    m.name = expect_ident("chart name");
    expect_punct("{");
    while (true) {
      skip_ws();
      if (try_punct("}")) break;
      if (pos >= text.size()) fail("unterminated chart body, expected '}'");
      m.states.push_back(parse_state());
    }
    skip_ws();
    if (pos < text.size()) fail("unexpected text after chart");
    return m;
  }
};

void resolve_level(const std::vector<DslState>& states) {
  std::set<std::string> names;
  for (const DslState& s : states) {
    if (!names.insert(s.name).second)
      throw ParseError(s.line, s.col, "duplicate state name '" + s.name + "'");
  }
  for (const DslState& s : states) {
    for (const DslTransition& t : s.transitions)
      if (!names.count(t.target))
        throw ParseError(t.line, t.col,
                         "transition target '" + t.target + "' is not a state here");
    resolve_level(s.states);
  }
}

void print_states(const std::vector<DslState>& states, int depth, std::string& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const DslState& s : states) {
    out += pad;
    if (s.initial) out += "initial ";
    out += "state " + s.name + " {\n";
    for (const DslTransition& t : s.transitions) {
      out += pad + "  -> " + t.target;
      if (t.guard) out += " [" + *t.guard + "]";
      out += "\n";
    }
    print_states(s.states, depth + 1, out);
    out += pad + "}\n";
  }
}

Graph level_to_graph(const std::vector<DslState>& states) {
  Graph g;
  g.direction = Direction::Down;
  g.classification.node_kinds["state"] = OrderSemantics::ConventionFree;
  g.classification.node_kinds["initial"] = OrderSemantics::ConventionFree;
  g.classification.edges = OrderSemantics::SemanticFixed;
  g.classification.ports = OrderSemantics::ConventionFree;

  for (std::size_t i = 0; i < states.size(); ++i) {
    const DslState& s = states[i];
    Node n;
    n.id = s.name;
    n.model_order = static_cast<int>(i);
    n.kind = s.initial ? "initial" : "state";
    if (!s.states.empty()) n.children.push_back(level_to_graph(s.states));
    g.nodes.push_back(std::move(n));
  }
  for (const DslState& s : states) {
    for (std::size_t k = 0; k < s.transitions.size(); ++k) {
      const DslTransition& t = s.transitions[k];
      Edge e;
      e.id = s.name + "#" + std::to_string(k);
      e.source = s.name;
      e.target = t.target;
      e.local_index = static_cast<int>(k);
      e.priority_label = static_cast<int>(k) + 1;
      g.edges.push_back(std::move(e));
    }
  }
  g = derive_global_edge_order(std::move(g));
  return synthesize_implicit_ports(std::move(g));
}

}  // namespace

bool DslModel::operator==(const DslModel& other) const {
  return name == other.name && states_equal(states, other.states);
}

DslModel parse_dsl(const std::string& text) {
  Parser p(text);
  p.skip_ws();
  DslModel m = p.parse_chart();
  resolve_level(m.states);
  return m;
}

std::string print_dsl(const DslModel& model) {
  std::string out = "chart " + model.name + " {\n";
  print_states(model.states, 1, out);
  out += "}\n";
  return out;
}

Graph dsl_to_graph(const DslModel& model) {
  return level_to_graph(model.states);
}

}  // namespace strata
