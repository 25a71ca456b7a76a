#pragma once

#include <stdexcept>
#include <string>

namespace nutl {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

// Malformed or unusable input (non-total Kripke relation, unguarded formula, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable resource cap was hit (rewrite node budget, PFG node budget).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TimeoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nutl
