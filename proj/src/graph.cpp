#include "ifk/graph.hpp"

#include <algorithm>
#include <queue>

namespace ifk {

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u >= n || raw.v >= n) {
      throw GraphError("edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                       "} has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (raw.u == raw.v) throw GraphError("self-loop at vertex " + std::to_string(raw.u));
    g.edges_.push_back(Edge::make(raw.u, raw.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                     "}");
  }

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

GraphBuilder::GraphBuilder(const Graph& base)
    : n_(base.vertex_count()), edges_(base.edges().begin(), base.edges().end()) {}

bool VertexState::valid_for(int k) const {
  switch (kind) {
    case StateKind::U: return j >= 0 && j <= k - 1;
    case StateKind::F: return j >= 1 && j <= k;
    case StateKind::I: return j == 0;
  }
  return false;
}

std::string VertexState::to_string() const {
  switch (kind) {
    case StateKind::U: return "U" + std::to_string(j);
    case StateKind::F: return "F" + std::to_string(j);
    case StateKind::I: return "I";
  }
  return "?";
}

PrecoloredGraph::PrecoloredGraph(Graph graph, int k)
    : PrecoloredGraph(std::move(graph), {}, k) {}

PrecoloredGraph::PrecoloredGraph(Graph graph, std::vector<VertexState> states, int k)
    : PrecoloredGraph(std::move(graph), std::move(states), k, false) {}

PrecoloredGraph PrecoloredGraph::relaxed(Graph graph, std::vector<VertexState> states, int k) {
  return PrecoloredGraph(std::move(graph), std::move(states), k, true);
}

PrecoloredGraph::PrecoloredGraph(Graph graph, std::vector<VertexState> states, int k,
                                 bool allow_weightless)
    : graph_(std::move(graph)), states_(std::move(states)), k_(k) {
  if (k < 2) throw GraphError("k must be at least 2, got " + std::to_string(k));
  if (states_.empty()) states_.assign(graph_.vertex_count(), VertexState::U(0));
  if (states_.size() != graph_.vertex_count()) {
    throw GraphError("state vector has " + std::to_string(states_.size()) + " entries for " +
                     std::to_string(graph_.vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < states_.size(); ++v) {
    const VertexState& s = states_[v];
    if (allow_weightless && s == VertexState::F(0)) continue;
    if (!s.valid_for(k)) {
      throw GraphError("state " + s.to_string() + " of vertex " + std::to_string(v) +
                       " is out of range for k=" + std::to_string(k));
    }
  }
}

bool PrecoloredGraph::trivially_precolored() const {
  return std::all_of(states_.begin(), states_.end(),
                     [](const VertexState& s) { return s.is_trivial(); });
}

bool PrecoloredGraph::has_weightless_f() const {
  return std::any_of(states_.begin(), states_.end(), [](const VertexState& s) {
    return s.kind == StateKind::F && s.j == 0;
  });
}

PrecoloredGraph PrecoloredGraph::with_state(Vertex v, VertexState s) const {
  if (!graph_.has_vertex(v)) throw std::out_of_range("vertex " + std::to_string(v));
  if (!s.valid_for(k_)) {
    throw GraphError("state " + s.to_string() + " is out of range for k=" + std::to_string(k_));
  }
  auto states = states_;
  states[v] = s;
  return relaxed(graph_, std::move(states), k_);
}

PrecoloredGraph PrecoloredGraph::decrement(Vertex v) const {
  if (!graph_.has_vertex(v)) throw std::out_of_range("vertex " + std::to_string(v));
  VertexState s = states_[v];
  if (s.kind == StateKind::I || s.j == 0) {
    throw GraphError("vertex " + std::to_string(v) + " in state " + s.to_string() +
                     " has no decrement");
  }
  --s.j;
  auto states = states_;
  states[v] = s;
  return relaxed(graph_, std::move(states), k_);
}

std::vector<bool> vertex_mask(std::size_t n, std::span<const Vertex> subset) {
  std::vector<bool> mask(n, false);
  for (Vertex v : subset) {
    if (v >= n) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    mask[v] = true;
  }
  return mask;
}

std::size_t induced_edge_count(const Graph& g, const std::vector<bool>& in_set) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += (in_set[e.u] && in_set[e.v]) ? 1 : 0;
  return count;
}

Subgraph<Graph> induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  auto mask = vertex_mask(g.vertex_count(), keep);
  Subgraph<Graph> out;
  out.old_to_new.assign(g.vertex_count(), kNoVertex);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mask[v]) {
      out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (mask[e.u] && mask[e.v]) edges.push_back(Edge::make(out.old_to_new[e.u], out.old_to_new[e.v]));
  }
  out.graph = Graph::from_edges(out.new_to_old.size(), edges);
  return out;
}

Subgraph<PrecoloredGraph> induced_subgraph(const PrecoloredGraph& g,
                                           std::span<const Vertex> keep) {
  auto sub = induced_subgraph(g.graph(), keep);
  std::vector<VertexState> states;
  states.reserve(sub.new_to_old.size());
  for (Vertex old : sub.new_to_old) states.push_back(g.state(old));
  auto pg = PrecoloredGraph::relaxed(std::move(sub.graph), std::move(states), g.k());
  return {std::move(pg), std::move(sub.old_to_new), std::move(sub.new_to_old)};
}

Graph delete_edge(const Graph& g, Edge e) {
  e = Edge::make(e.u, e.v);
  if (!g.has_edge(e.u, e.v)) {
    throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     "} is not in the graph");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Graph::from_edges(g.vertex_count(), edges);
}

PrecoloredGraph delete_edge(const PrecoloredGraph& g, Edge e) {
  return PrecoloredGraph::relaxed(delete_edge(g.graph(), e),
                                  {g.states().begin(), g.states().end()}, g.k());
}

Subgraph<Graph> delete_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
  std::vector<Vertex> keep;
  keep.reserve(g.vertex_count() - 1);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

Subgraph<PrecoloredGraph> delete_vertex(const PrecoloredGraph& g, Vertex v) {
  if (!g.graph().has_vertex(v)) {
    throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
  }
  std::vector<Vertex> keep;
  keep.reserve(g.vertex_count() - 1);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[root] = 0;
    parent[root] = kNoVertex;
    queue.push(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w) {
          // Non-tree edge closes a closed walk through root of this length,
          // which contains a cycle no longer than it.
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    queue = {};
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    out.emplace_back();
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace ifk
