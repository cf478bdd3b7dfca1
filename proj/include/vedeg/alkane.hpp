#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "vedeg/graph.hpp"

namespace vedeg {

/// Parse failure with source position. what() reads "line:col: message".
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line_(line), col_(col), message_(message) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& message() const { return message_; }

  private:
    int line_;
    int col_;
    std::string message_;
};

/// Parse the alkane SMILES subset (alphabet C, '(', ')') into the
/// hydrogen-suppressed carbon skeleton. Vertex i is the i-th C in
/// left-to-right order; each C after the first bonds to the most recent
/// atom at the current nesting level.
///
/// Grammar:   alkane := atom chain
///            chain  := (branch* atom)*
///            branch := '(' atom chain ')'
///
/// `line` is used only for error positions (one molecule per input line).
Graph parse_alkane(std::string_view s, int line = 1);

/// Canonical string for a carbon-skeleton tree (max degree 4): rooted at a
/// centroid, subtrees ordered by canonical form, so isomorphic skeletons
/// render identically and parse_alkane(render_alkane(g)) is isomorphic to g.
std::string render_alkane(const Graph& g);

}  // namespace vedeg
