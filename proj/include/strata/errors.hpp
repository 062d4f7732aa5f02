#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Raised by the DSL frontend; line/col are 1-based positions in the source text.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + what_),
        line(line_),
        col(col_) {}
};

// Raised by the JSON frontend for malformed or (in strict mode) unknown fields.
struct SchemaError : std::runtime_error {
  std::string path;
  SchemaError(const std::string& path_, const std::string& what_)
      : std::runtime_error(path_ + ": " + what_), path(path_) {}
};

// Raised when an input graph fails validation or an operation's contract.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace strata
