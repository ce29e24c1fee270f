#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ifk/coefficients.hpp"
#include "ifk/graph.hpp"
#include "ifk/rational.hpp"

namespace ifk {

/// Potential of a vertex set: weighted vertex count minus C_E times the
/// number of induced edges. Duplicate ids count once.
std::int64_t potential(const PrecoloredGraph& g, std::span<const Vertex> subset);
std::int64_t potential(const PrecoloredGraph& g, const CoefficientTable& table,
                       const std::vector<bool>& in_set);

enum class SubsetMode { All, Nonempty, NonemptyProper };

struct PotentialMinimum {
  std::int64_t value = 0;
  std::vector<Vertex> witness;  // ascending
};

/// Exact minimum of the potential over subsets in `mode`, via minimum cuts.
/// Throws std::invalid_argument when the mode admits no subset (Nonempty on
/// the empty graph, NonemptyProper with fewer than two vertices).
PotentialMinimum min_potential_subset(const PrecoloredGraph& g, SubsetMode mode);

struct DensityResult {
  Rational mad;
  std::vector<Vertex> witness;  // a nonempty set attaining mad
};

/// Maximum average degree 2|E(G[R])|/|R| over nonempty R. Throws
/// std::invalid_argument on the empty graph.
DensityResult mad(const Graph& g);

/// Maximises profit * |E(G[R])| - sum of cost(v) over R with the given
/// vertices forced in or out. Exposed for testing the reduction directly.
struct ClosureResult {
  std::int64_t profit = 0;
  std::vector<Vertex> selected;
};
ClosureResult max_profit_subset(const Graph& g, std::int64_t edge_profit,
                                std::span<const std::int64_t> vertex_cost,
                                std::span<const Vertex> forced_in = {},
                                std::span<const Vertex> forced_out = {});

}  // namespace ifk
