#include "ifk/constructions.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "ifk/coefficients.hpp"

namespace ifk {
namespace {

void pendent_triangle(GraphBuilder& b, Vertex v) {
  Vertex a = b.add_vertex();
  Vertex c = b.add_vertex();
  b.add_edge(v, a);
  b.add_edge(a, c);
  b.add_edge(c, v);
}

void two_thread(GraphBuilder& b, Vertex y, Vertex z) {
  Vertex y1 = b.add_vertex();
  Vertex z1 = b.add_vertex();
  b.add_edge(y, y1);
  b.add_edge(y1, z1);
  b.add_edge(z1, z);
}

void require_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
}

void attach_gadget(GraphBuilder& b, Vertex root, const VertexState& kind, int k) {
  switch (kind.kind) {
    case StateKind::U:
      for (int i = 0; i < kind.j; ++i) pendent_triangle(b, root);
      return;
    case StateKind::I: {
      Vertex f = b.add_vertex();
      b.add_edge(root, f);
      attach_gadget(b, f, VertexState::F(k), k);
      return;
    }
    case StateKind::F:
      break;
  }
  const int j = kind.j;
  if (j >= upper_f_regime_start(k)) {
    // The F_k gadget is the spine triangle of G_{k,0}; lower j in this regime
    // drop k-j of the triangles pendent at the root.
    Vertex w = b.add_vertex();
    Vertex x = b.add_vertex();
    b.add_edge(root, w);
    b.add_edge(w, x);
    b.add_edge(x, root);
    for (int i = 0; i < (k - 2) / 2 - (k - j); ++i) pendent_triangle(b, root);
    for (int i = 0; i < (k - 1) / 2; ++i) pendent_triangle(b, w);
    for (int i = 0; i < k / 2; ++i) pendent_triangle(b, x);
    return;
  }
  // F_1 is an edge to an I vertex; F_j below the upper regime adds j-1
  // pendent triangles to it.
  Vertex i = b.add_vertex();
  b.add_edge(root, i);
  attach_gadget(b, i, VertexState::I(), k);
  for (int t = 1; t < j; ++t) pendent_triangle(b, root);
}

}  // namespace

Graph add_pendent_triangles(const Graph& g, Vertex v, std::size_t count) {
  require_vertex(g, v);
  GraphBuilder b(g);
  for (std::size_t i = 0; i < count; ++i) pendent_triangle(b, v);
  return b.build();
}

Graph add_two_threads(const Graph& g, Vertex y, Vertex z, std::size_t count) {
  require_vertex(g, y);
  require_vertex(g, z);
  if (y == z) throw GraphError("2-thread endpoints must differ");
  GraphBuilder b(g);
  for (std::size_t i = 0; i < count; ++i) two_thread(b, y, z);
  return b.build();
}

PrecoloredGraph sharpness_graph(int k, int t) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (t > 100'000) throw std::invalid_argument("t is unreasonably large");
  GraphBuilder b;
  auto v = [](int j) { return static_cast<Vertex>(3 * j); };
  auto w = [](int j) { return static_cast<Vertex>(3 * j + 1); };
  auto x = [](int j) { return static_cast<Vertex>(3 * j + 2); };
  for (int j = 0; j <= t; ++j) {
    b.add_vertex();
    b.add_vertex();
    b.add_vertex();
    b.add_edge(v(j), w(j));
    b.add_edge(w(j), x(j));
    b.add_edge(x(j), v(j));
  }
  for (int i = 0; i < (k - 2) / 2; ++i) pendent_triangle(b, v(0));
  for (int i = 0; i < (k - 1) / 2; ++i) pendent_triangle(b, w(0));
  for (int i = 0; i < k / 2; ++i) pendent_triangle(b, x(0));
  pendent_triangle(b, v(t));
  for (int j = 1; j <= t; ++j) {
    for (int i = 0; i < (k - 2) / 2; ++i) two_thread(b, v(j - 1), v(j));
    for (int i = 0; i < (k - 1) / 2; ++i) two_thread(b, v(j - 1), w(j));
    for (int i = 0; i < k / 2; ++i) two_thread(b, v(j - 1), x(j));
  }
  return PrecoloredGraph(b.build(), k);
}

std::vector<std::string> sharpness_header(int k, int t) {
  const int spine = 3 * (t + 1);
  const int pendent = 2 * ((k - 2) / 2 + (k - 1) / 2 + k / 2 + 1);
  std::vector<std::string> out;
  out.push_back("sharpness graph G_{" + std::to_string(k) + "," + std::to_string(t) + "}");
  out.push_back("spine: v_j = 3j, w_j = 3j+1, x_j = 3j+2 for j = 0.." + std::to_string(t));
  out.push_back("pendent triangles: vertices " + std::to_string(spine) + ".." +
                std::to_string(spine + pendent - 1) + " in pairs, " +
                std::to_string((k - 2) / 2) + " at v_0, " + std::to_string((k - 1) / 2) +
                " at w_0, " + std::to_string(k / 2) + " at x_0, 1 at v_" + std::to_string(t));
  if (t > 0) {
    out.push_back("2-threads: vertices from " + std::to_string(spine + pendent) +
                  " in pairs (near v_{j-1}, near target), for j = 1.." + std::to_string(t) +
                  ": " + std::to_string((k - 2) / 2) + " to v_j, " +
                  std::to_string((k - 1) / 2) + " to w_j, " + std::to_string(k / 2) + " to x_j");
  }
  return out;
}

bool is_gadget_kind(const VertexState& kind, int k) {
  return k >= 2 && kind.valid_for(k) && !kind.is_trivial();
}

RootedGraph gadget(const VertexState& kind, int k) {
  if (!is_gadget_kind(kind, k)) {
    throw std::invalid_argument("no gadget for " + kind.to_string() + " with k=" +
                                std::to_string(k));
  }
  GraphBuilder b;
  Vertex root = b.add_vertex();
  attach_gadget(b, root, kind, k);
  return {b.build(), root};
}

Expansion expand_precoloring(const PrecoloredGraph& g) {
  if (g.has_weightless_f()) throw std::invalid_argument("cannot expand the weightless F state");
  GraphBuilder b(g.graph());
  Expansion out;
  out.embedding.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    attach_gadget(b, v, g.state(v), g.k());
    out.embedding[v] = v;
  }
  out.graph = PrecoloredGraph(b.build(), g.k());
  return out;
}

namespace {

struct RootOutcome {
  Label label;
  std::int64_t weight;  // weight of the root's F-component, 0 when I
  friend auto operator<=>(const RootOutcome&, const RootOutcome&) = default;
};

// Weight of the F-component containing `root`; every vertex here is U(0).
std::int64_t root_component_weight(const Graph& g, const Coloring& c, Vertex root) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{root};
  seen[root] = true;
  std::int64_t weight = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++weight;
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w] && c.labels[w] == Label::F) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return weight;
}

RootOutcome outcome_of(const Graph& g, const Coloring& c, Vertex root) {
  if (c.labels[root] == Label::I) return {Label::I, 0};
  return {Label::F, root_component_weight(g, c, root)};
}

}  // namespace

GadgetVerdict verify_gadget(const VertexState& kind, int k, const SolveOptions& options) {
  const RootedGraph gd = gadget(kind, k);
  const PrecoloredGraph pg(gd.graph, k);
  const std::int64_t j = kind.j;
  GadgetVerdict verdict;

  std::set<RootOutcome> outcomes;
  auto status = for_each_coloring(pg, [&](const Coloring& c) {
    ++verdict.colorings;
    outcomes.insert(outcome_of(gd.graph, c, gd.root));
    return true;
  }, options);
  if (status == EnumerationStatus::BudgetExceeded) {
    verdict.budget_exceeded = true;
    verdict.failures.push_back("enumeration budget exceeded");
    return verdict;
  }

  auto fail = [&](std::string msg) { verdict.failures.push_back(std::move(msg)); };
  const bool any_i = outcomes.count({Label::I, 0}) > 0;
  switch (kind.kind) {
    case StateKind::U:
      for (const auto& o : outcomes) {
        if (o.label == Label::F && o.weight < j + 1) {
          fail("root in F with component weight " + std::to_string(o.weight));
        }
      }
      if (!any_i) fail("no coloring puts the root in I");
      if (!outcomes.count({Label::F, j + 1})) {
        fail("no coloring gives the root component weight " + std::to_string(j + 1));
      }
      break;
    case StateKind::F:
      for (const auto& o : outcomes) {
        if (o.label == Label::I) {
          fail("a coloring puts the root in I");
        } else if (o.weight < j) {
          fail("root in F with component weight " + std::to_string(o.weight));
        }
      }
      if (!outcomes.count({Label::F, j})) {
        fail("no coloring gives the root component weight " + std::to_string(j));
      }
      break;
    case StateKind::I:
      if (outcomes.empty()) fail("gadget has no coloring");
      for (const auto& o : outcomes) {
        if (o.label == Label::F) fail("a coloring puts the root in F");
      }
      break;
  }

  // Deleting any edge must relax the simulated constraint.
  auto relaxed = [&](const RootOutcome& o) {
    switch (kind.kind) {
      case StateKind::U: return o.label == Label::F && o.weight <= j;
      case StateKind::F: return o.label == Label::I || o.weight <= j - 1;
      case StateKind::I: return o.label == Label::F;
    }
    return false;
  };
  for (const Edge& e : gd.graph.edges()) {
    const Graph minus = delete_edge(gd.graph, e);
    bool found = false;
    auto st = for_each_coloring(PrecoloredGraph(minus, k), [&](const Coloring& c) {
      found = relaxed(outcome_of(minus, c, gd.root));
      return !found;
    }, options);
    if (st == EnumerationStatus::BudgetExceeded) {
      verdict.budget_exceeded = true;
      fail("enumeration budget exceeded");
      return verdict;
    }
    if (!found) {
      fail("deleting edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
           " does not relax the root");
    }
  }
  verdict.pass = verdict.failures.empty();
  return verdict;
}

}  // namespace ifk
