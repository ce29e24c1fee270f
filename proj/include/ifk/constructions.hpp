#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ifk/graph.hpp"
#include "ifk/solver.hpp"

namespace ifk {

/// Identifies v with a vertex of `count` new triangles (two new U(0) vertices
/// and three new edges each).
Graph add_pendent_triangles(const Graph& g, Vertex v, std::size_t count);

/// Adds `count` internally disjoint paths y - y' - z' - z through new vertices.
Graph add_two_threads(const Graph& g, Vertex y, Vertex z, std::size_t count);

/// The critical sharpness graph G_{k,t}, trivially precolored.
///
/// Numbering: spine triangle j is v_j = 3j, w_j = 3j+1, x_j = 3j+2; then the
/// pendent-triangle vertices (floor((k-2)/2) at v_0, floor((k-1)/2) at w_0,
/// floor(k/2) at x_0, one at v_t), then for j = 1..t the 2-thread vertices
/// from v_{j-1} (floor((k-2)/2) to v_j, floor((k-1)/2) to w_j, floor(k/2) to
/// x_j), each thread listing the vertex next to v_{j-1} first.
PrecoloredGraph sharpness_graph(int k, int t);

/// Comment lines documenting the numbering above for a concrete (k, t).
std::vector<std::string> sharpness_header(int k, int t);

/// Gadget kinds are the non-trivial states: U(1..k-1), F(1..k), I.
bool is_gadget_kind(const VertexState& kind, int k);

struct RootedGraph {
  Graph graph;
  Vertex root = 0;
};

/// An all-U(0) graph whose root behaves like a vertex precolored `kind`.
/// Throws std::invalid_argument for kinds that are not gadget kinds.
RootedGraph gadget(const VertexState& kind, int k);

struct GadgetVerdict {
  bool pass = false;
  bool budget_exceeded = false;
  std::size_t colorings = 0;          // colorings of the intact gadget
  std::vector<std::string> failures;  // human-readable, empty on pass
};

/// Enumerates every coloring of the gadget and checks that it constrains the
/// root exactly like the precoloring it stands for, and that deleting any one
/// edge relaxes that constraint.
GadgetVerdict verify_gadget(const VertexState& kind, int k, const SolveOptions& options = {});

struct Expansion {
  PrecoloredGraph graph;          // trivially precolored
  std::vector<Vertex> embedding;  // original vertex -> vertex of the expansion
};

/// Replaces every precolored vertex by the root of the matching gadget
/// (I expands through the F_k gadget). Original ids are kept; gadget vertices
/// are appended in order of the vertex they hang from.
Expansion expand_precoloring(const PrecoloredGraph& g);

}  // namespace ifk
