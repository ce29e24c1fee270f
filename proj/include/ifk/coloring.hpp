#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ifk/graph.hpp"

namespace ifk {

enum class Label : std::uint8_t { I, F };

/// Total assignment of every vertex to I or F.
struct Coloring {
  std::vector<Label> labels;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Raised when a coloring does not fit its graph: wrong size, or a label that
/// contradicts the precoloring (an I vertex labelled F or vice versa).
class ColoringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weight a vertex contributes to its F-component when colored F: j for F(j)
/// (itself plus j-1 fake neighbours), j+1 for U(j) (itself plus j fake ones).
std::int64_t f_weight(const VertexState& s);

struct FComponent {
  std::vector<Vertex> members;  // ascending
  std::int64_t weight = 0;
};

/// Components of G[F] ordered by smallest member.
std::vector<FComponent> f_components(const PrecoloredGraph& g, const Coloring& c);

struct Violation {
  enum class Kind { IEdge, Overweight, FCycle };
  Kind kind;
  std::vector<Vertex> vertices;  // IEdge: both ends; Overweight: component members
  std::vector<Edge> edges;       // FCycle: the edges of one cycle
  std::int64_t weight = 0;       // Overweight only

  std::string describe() const;
};

struct VerifyReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every coloring constraint independently. Throws ColoringError when
/// the coloring contradicts the precoloring or has the wrong size.
VerifyReport verify(const PrecoloredGraph& g, const Coloring& c);

// Coloring file format: one line per vertex, `v <id> I` or
// `v <id> F <component> <weight>`, components numbered by smallest member.
std::string format_coloring(const PrecoloredGraph& g, const Coloring& c);
/// Accepts the format above; component and weight fields are optional and
/// not trusted. Every vertex must be listed exactly once.
Coloring parse_coloring(const PrecoloredGraph& g, std::string_view text);

/// Graphviz rendering: I vertices black, F vertices white.
std::string coloring_dot(const PrecoloredGraph& g, const Coloring& c);

}  // namespace ifk
