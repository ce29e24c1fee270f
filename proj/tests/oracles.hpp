// Brute-force reference implementations, deliberately independent of the
// library's algorithms: exhaustive enumeration only.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ifk/graph.hpp"

namespace oracle {

using ifk::Edge;
using ifk::Graph;
using ifk::PrecoloredGraph;
using ifk::StateKind;
using ifk::Vertex;
using ifk::VertexState;

inline std::int64_t c_e(int k) { return k % 2 == 0 ? 3 * k - 1 : 3 * k - 2; }

// Coefficients straight from their closed forms.
inline std::int64_t coeff(int k, const VertexState& s) {
  const std::int64_t ce = c_e(k);
  const std::int64_t cu0 = (3 * ce - 3) / 2;
  switch (s.kind) {
    case StateKind::U: return cu0 - 3 * s.j;
    case StateKind::F: return 2 * s.j <= k + 1 ? ce - 3 * s.j : 3 * (k - s.j);
    case StateKind::I: return (ce - 3) / 2;
  }
  return 0;
}

inline std::int64_t potential_mask(const PrecoloredGraph& g, std::uint64_t mask) {
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mask >> v & 1) total += coeff(g.k(), g.state(v));
  }
  for (const Edge& e : g.graph().edges()) {
    if ((mask >> e.u & 1) && (mask >> e.v & 1)) total -= c_e(g.k());
  }
  return total;
}

inline std::size_t edges_in(const Graph& g, std::uint64_t mask) {
  std::size_t m = 0;
  for (const Edge& e : g.edges()) m += ((mask >> e.u & 1) && (mask >> e.v & 1)) ? 1 : 0;
  return m;
}

// mode: 0 all, 1 nonempty, 2 nonempty proper.
inline std::int64_t min_potential(const PrecoloredGraph& g, int mode) {
  const std::size_t n = g.vertex_count();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::optional<std::int64_t> best;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (mode >= 1 && mask == 0) continue;
    if (mode == 2 && mask == full) continue;
    std::int64_t p = potential_mask(g, mask);
    if (!best || p < *best) best = p;
  }
  return *best;
}

// Maximum of 2|E(R)|/|R| as a reduced pair.
inline std::pair<std::int64_t, std::int64_t> mad(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::int64_t bn = 0, bd = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t num = 2 * static_cast<std::int64_t>(edges_in(g, mask));
    std::int64_t den = std::popcount(mask);
    if (num * bd > bn * den) {
      bn = num;
      bd = den;
    }
  }
  std::int64_t d = std::gcd(bn, bd);
  return {bn / d, bd / d};
}

// Shortest simple cycle found by enumerating every simple path from each
// start s through vertices larger than s.
inline std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<std::size_t> best;
  std::vector<bool> on(n, false);
  auto dfs = [&](auto&& self, Vertex s, Vertex u, std::size_t len) -> void {
    for (Vertex w : g.neighbors(u)) {
      if (w == s && len >= 3) {
        if (!best || len < *best) best = len;
      } else if (w > s && !on[w]) {
        on[w] = true;
        self(self, s, w, len + 1);
        on[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = true;
    dfs(dfs, s, s, 1);
    on[s] = false;
  }
  return best;
}

// Checks a full labelling (bit v set = F) against the coloring rules.
inline bool valid_labelling(const PrecoloredGraph& g, std::uint64_t f_mask) {
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    const VertexState& s = g.state(v);
    const bool is_f = f_mask >> v & 1;
    if (s.kind == StateKind::I && is_f) return false;
    if (s.kind == StateKind::F && !is_f) return false;
  }
  for (const Edge& e : g.graph().edges()) {
    if (!(f_mask >> e.u & 1) && !(f_mask >> e.v & 1)) return false;
  }
  // Components of G[F] by repeated relabelling; acyclic iff |E| = |V| - 1.
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : g.graph().edges()) {
      if ((f_mask >> e.u & 1) && (f_mask >> e.v & 1) && comp[e.u] != comp[e.v]) {
        comp[e.u] = comp[e.v] = std::min(comp[e.u], comp[e.v]);
        changed = true;
      }
    }
  }
  std::vector<std::int64_t> weight(n, 0), verts(n, 0), edges(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!(f_mask >> v & 1)) continue;
    const VertexState& s = g.state(v);
    weight[comp[v]] += s.kind == StateKind::F ? s.j : s.j + 1;
    ++verts[comp[v]];
  }
  for (const Edge& e : g.graph().edges()) {
    if ((f_mask >> e.u & 1) && (f_mask >> e.v & 1)) ++edges[comp[e.u]];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (verts[v] == 0) continue;
    if (weight[v] > g.k() || edges[v] != verts[v] - 1) return false;
  }
  return true;
}

inline std::size_t count_colorings(const PrecoloredGraph& g) {
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
    count += valid_labelling(g, mask) ? 1 : 0;
  }
  return count;
}

inline bool colorable(const PrecoloredGraph& g) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
    if (valid_labelling(g, mask)) return true;
  }
  return false;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

inline VertexState random_state(std::mt19937_64& rng, int k, bool allow_i, double trivial_p) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < trivial_p) return VertexState::U(0);
  std::uniform_int_distribution<int> pick(0, allow_i ? 2 : 1);
  switch (pick(rng)) {
    case 0: return VertexState::U(std::uniform_int_distribution<int>(0, k - 1)(rng));
    case 1: return VertexState::F(std::uniform_int_distribution<int>(1, k)(rng));
    default: return VertexState::I();
  }
}

// Random states, re-drawn until no edge joins two I vertices.
inline PrecoloredGraph random_precolored(std::mt19937_64& rng, const Graph& g, int k,
                                         bool allow_i, double trivial_p) {
  std::vector<VertexState> states(g.vertex_count());
  for (auto& s : states) s = random_state(rng, k, allow_i, trivial_p);
  for (const Edge& e : g.edges()) {
    if (states[e.u].kind == StateKind::I && states[e.v].kind == StateKind::I) {
      states[e.v] = VertexState::U(0);
    }
  }
  return PrecoloredGraph(g, std::move(states), k);
}

}  // namespace oracle
