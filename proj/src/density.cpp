#include "ifk/density.hpp"

#include <stdexcept>
#include <string>

#include "ifk/flow.hpp"

namespace ifk {

std::int64_t potential(const PrecoloredGraph& g, const CoefficientTable& table,
                       const std::vector<bool>& in_set) {
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_set[v]) total += table.of(g.state(v));
  }
  return total - table.c_e * static_cast<std::int64_t>(induced_edge_count(g.graph(), in_set));
}

std::int64_t potential(const PrecoloredGraph& g, std::span<const Vertex> subset) {
  return potential(g, coefficients(g.k()), vertex_mask(g.vertex_count(), subset));
}

// Project selection: source -> edge node (profit), edge node -> both endpoint
// nodes (infinite), vertex node -> sink (cost). A closed set on the source side
// of a minimum cut maximises profit(E(R)) - cost(R); its value is
// total profit - cut.
ClosureResult max_profit_subset(const Graph& g, std::int64_t edge_profit,
                                std::span<const std::int64_t> vertex_cost,
                                std::span<const Vertex> forced_in,
                                std::span<const Vertex> forced_out) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (vertex_cost.size() != n) throw std::invalid_argument("cost vector size mismatch");
  if (edge_profit < 0) throw std::invalid_argument("negative edge profit");

  const auto source = static_cast<FlowNetwork::Node>(n + m);
  const auto sink = static_cast<FlowNetwork::Node>(n + m + 1);
  FlowNetwork net(n + m + 2, source, sink);
  std::int64_t total_profit = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto node = static_cast<FlowNetwork::Node>(n + i);
    const Edge& e = g.edges()[i];
    net.add_arc(source, node, edge_profit);
    net.add_infinite_arc(node, e.u);
    net.add_infinite_arc(node, e.v);
    total_profit += edge_profit;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (vertex_cost[v] < 0) throw std::invalid_argument("negative vertex cost");
    net.add_arc(v, sink, vertex_cost[v]);
  }
  for (Vertex v : forced_in) net.add_infinite_arc(source, v);
  for (Vertex v : forced_out) net.add_infinite_arc(v, sink);

  auto flow = max_flow(net);
  ClosureResult out;
  out.profit = total_profit - flow.value;
  for (Vertex v = 0; v < n; ++v) {
    if (flow.source_side[v]) out.selected.push_back(v);
  }
  return out;
}

PotentialMinimum min_potential_subset(const PrecoloredGraph& g, SubsetMode mode) {
  const std::size_t n = g.vertex_count();
  const auto table = coefficients(g.k());
  std::vector<std::int64_t> cost(n);
  for (Vertex v = 0; v < n; ++v) cost[v] = table.of(g.state(v));

  auto run = [&](std::span<const Vertex> in, std::span<const Vertex> out) {
    auto closure = max_profit_subset(g.graph(), table.c_e, cost, in, out);
    return PotentialMinimum{-closure.profit, std::move(closure.selected)};
  };

  switch (mode) {
    case SubsetMode::All:
      return run({}, {});
    case SubsetMode::Nonempty: {
      if (n == 0) throw std::invalid_argument("no nonempty subset of an empty graph");
      PotentialMinimum best;
      for (Vertex v = 0; v < n; ++v) {
        const Vertex in[] = {v};
        auto cand = run(in, {});
        if (v == 0 || cand.value < best.value) best = std::move(cand);
      }
      return best;
    }
    case SubsetMode::NonemptyProper: {
      if (n < 2) throw std::invalid_argument("no nonempty proper subset with fewer than 2 vertices");
      // Either vertex 0 is in R and some w is out, or 0 is out and some u is in.
      PotentialMinimum best;
      bool have = false;
      const Vertex zero[] = {0};
      for (Vertex w = 1; w < n; ++w) {
        const Vertex other[] = {w};
        for (auto cand : {run(zero, other), run(other, zero)}) {
          if (!have || cand.value < best.value) {
            best = std::move(cand);
            have = true;
          }
        }
      }
      return best;
    }
  }
  throw std::logic_error("unreachable");
}

// Dinkelbach iteration: starting from the density of the whole graph, ask the
// flow oracle for a set beating the current ratio p/q (maximise
// 2q|E(R)| - p|R|). Each improvement strictly increases the ratio, and the
// ratios come from a finite set, so the loop ends at the exact optimum.
DensityResult mad(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mad of the empty graph is undefined");
  DensityResult best;
  best.witness.resize(n);
  for (Vertex v = 0; v < n; ++v) best.witness[v] = v;
  best.mad = Rational(2 * static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(n));

  std::vector<std::int64_t> cost(n);
  for (;;) {
    std::fill(cost.begin(), cost.end(), best.mad.num());
    auto closure = max_profit_subset(g, 2 * best.mad.den(), cost);
    if (closure.profit <= 0) break;
    auto mask = vertex_mask(n, closure.selected);
    const auto edges = static_cast<std::int64_t>(induced_edge_count(g, mask));
    Rational density(2 * edges, static_cast<std::int64_t>(closure.selected.size()));
    if (!(density > best.mad)) throw std::logic_error("density search failed to improve");
    best.mad = density;
    best.witness = std::move(closure.selected);
  }
  return best;
}

}  // namespace ifk
