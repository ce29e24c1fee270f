#pragma once

#include <cstdint>
#include <vector>

#include "ifk/graph.hpp"
#include "ifk/rational.hpp"

namespace ifk {

/// Vertex and edge weights of the potential function for a fixed k.
struct CoefficientTable {
  int k = 2;
  std::int64_t c_e = 0;
  std::vector<std::int64_t> c_u;  // index 0..k
  std::vector<std::int64_t> c_f;  // index 0..k; entry 0 is unused and zero
  std::int64_t c_i = 0;

  std::int64_t u(int j) const { return c_u.at(static_cast<std::size_t>(j)); }
  std::int64_t f(int j) const;
  /// Coefficient of a vertex in the given state. Throws for the weightless F(0).
  std::int64_t of(const VertexState& s) const;
};

/// Throws std::invalid_argument for k < 2.
CoefficientTable coefficients(int k);

/// First index of the upper C_F regime, floor((k+3)/2).
int upper_f_regime_start(int k);

/// Largest mad that still guarantees an (I,F_k)-coloring:
/// 3 - 3/(3k-1) for even k, 3 - 3/(3k-2) for odd k.
Rational f_threshold(int k);

}  // namespace ifk
