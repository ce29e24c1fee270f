#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifk {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; every
/// edit returns a new value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Rejects self-loops, parallel edges and out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  /// Sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  bool has_vertex(Vertex v) const { return v < vertex_count(); }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Accumulates vertices and edges for generators; validation happens in build().
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(const Graph& base);

  Vertex add_vertex() { return static_cast<Vertex>(n_++); }
  void add_edge(Vertex a, Vertex b) { edges_.push_back(Edge::make(a, b)); }
  std::size_t vertex_count() const { return n_; }

  Graph build() const { return Graph::from_edges(n_, edges_); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

enum class StateKind : std::uint8_t { U, F, I };

/// Precoloring state of a vertex. U(j): uncolored with j fake F-neighbours.
/// F(j): colored F, contributing weight j to its F-component. I: colored I.
struct VertexState {
  StateKind kind = StateKind::U;
  int j = 0;

  static constexpr VertexState U(int j) { return {StateKind::U, j}; }
  static constexpr VertexState F(int j) { return {StateKind::F, j}; }
  static constexpr VertexState I() { return {StateKind::I, 0}; }

  bool is_trivial() const { return kind == StateKind::U && j == 0; }
  /// Bounds for a given k: 0 <= j <= k-1 for U, 1 <= j <= k for F.
  bool valid_for(int k) const;

  std::string to_string() const;

  friend bool operator==(const VertexState&, const VertexState&) = default;
};

/// A graph together with a precoloring and the forest-component bound k.
///
/// States are validated against k at construction. The only exception is the
/// weightless F state F(0), admitted only through relaxed() and decrement():
/// it is what decrementing an F(1) vertex yields during criticality checks and
/// behaves as an F vertex contributing weight 0.
class PrecoloredGraph {
 public:
  PrecoloredGraph() = default;
  /// All vertices U(0).
  PrecoloredGraph(Graph graph, int k);
  PrecoloredGraph(Graph graph, std::vector<VertexState> states, int k);
  /// As the constructor, but also admits the weightless F(0) state.
  static PrecoloredGraph relaxed(Graph graph, std::vector<VertexState> states, int k);

  const Graph& graph() const { return graph_; }
  int k() const { return k_; }
  std::span<const VertexState> states() const { return states_; }
  const VertexState& state(Vertex v) const { return states_[v]; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }

  bool trivially_precolored() const;
  bool has_weightless_f() const;

  PrecoloredGraph with_state(Vertex v, VertexState s) const;
  /// U(j) -> U(j-1) for j >= 1, F(j) -> F(j-1) (F(0) allowed). Other states throw.
  PrecoloredGraph decrement(Vertex v) const;

  friend bool operator==(const PrecoloredGraph&, const PrecoloredGraph&) = default;

 private:
  PrecoloredGraph(Graph graph, std::vector<VertexState> states, int k, bool allow_weightless);

  Graph graph_;
  std::vector<VertexState> states_;
  int k_ = 2;
};

/// Result of a vertex-removing edit: the new value plus the id maps.
template <class G>
struct Subgraph {
  G graph;
  std::vector<Vertex> old_to_new;  // kNoVertex for removed vertices
  std::vector<Vertex> new_to_old;
};

Subgraph<Graph> induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Subgraph<PrecoloredGraph> induced_subgraph(const PrecoloredGraph& g, std::span<const Vertex> keep);

Graph delete_edge(const Graph& g, Edge e);
PrecoloredGraph delete_edge(const PrecoloredGraph& g, Edge e);
Subgraph<Graph> delete_vertex(const Graph& g, Vertex v);
Subgraph<PrecoloredGraph> delete_vertex(const PrecoloredGraph& g, Vertex v);

/// Length of a shortest cycle, nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Components ordered by smallest member; members ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Number of edges with both endpoints in the marked set.
std::size_t induced_edge_count(const Graph& g, const std::vector<bool>& in_set);

/// Membership mask for a vertex list; throws std::out_of_range on bad ids.
std::vector<bool> vertex_mask(std::size_t n, std::span<const Vertex> subset);

}  // namespace ifk
