#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ifk/graph.hpp"

namespace ifk {

/// Parse failure carrying the 1-based line it was detected on (0 when the
/// problem is the input as a whole, e.g. a missing `n` line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Graph file format, one directive per line, '#' starts a comment:
//
//   k <int>              first directive, k >= 2
//   n <int>              vertex count, before any e/pre line
//   e <u> <v>            one undirected edge
//   pre <v> U <j> | pre <v> F <j> | pre <v> I
//
// Unlisted vertices are U(0).
PrecoloredGraph parse_graph(std::string_view text);

/// Canonical text: k, n, sorted edges, then pre lines for non-U(0) vertices in
/// id order. `header` lines are emitted first as `# ...` comments.
std::string serialize_graph(const PrecoloredGraph& g,
                            const std::vector<std::string>& header = {});

}  // namespace ifk
