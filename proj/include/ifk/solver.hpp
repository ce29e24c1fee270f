#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ifk/coloring.hpp"
#include "ifk/graph.hpp"

namespace ifk {

struct SolveOptions {
  /// Maximum number of branching decisions; 0 means unlimited.
  std::uint64_t max_nodes = 0;
};

enum class SolveStatus { Feasible, Infeasible, BudgetExceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

/// Exact decision and construction of an (I,F_k)-coloring by backtracking.
/// Vertices are branched in order of descending degree (ties by id), F before
/// I, with unit propagation: a vertex next to an I vertex must be F, and a
/// vertex that cannot join the F-forest without a cycle or overweight
/// component must be I. The returned certificate is deterministic.
SolveResult solve(const PrecoloredGraph& g, const SolveOptions& options = {});

enum class EnumerationStatus { Complete, Stopped, BudgetExceeded };

/// Calls `visit` once for every (I,F_k)-coloring; `visit` returns false to
/// stop early.
EnumerationStatus for_each_coloring(const PrecoloredGraph& g,
                                    const std::function<bool(const Coloring&)>& visit,
                                    const SolveOptions& options = {});

struct CriticalityVerdict {
  enum class Reason {
    Critical,
    Colorable,                 // the graph itself has a coloring
    EdgeDeletionInfeasible,    // removing `edge` leaves an uncolorable graph
    VertexDeletionInfeasible,  // removing `vertex` leaves an uncolorable graph
    DecrementInfeasible,       // decrementing the state of `vertex` stays uncolorable
    BudgetExceeded,
  };

  bool is_critical = false;
  Reason reason = Reason::Colorable;
  std::optional<Coloring> coloring;  // Colorable only
  std::optional<Edge> edge;
  std::optional<Vertex> vertex;

  std::string describe() const;
};

/// Uncolorable, every single-edge and single-vertex deletion is colorable,
/// and every decrement of a U(j>=1) or F(j) state is colorable. F(1)
/// decrements to the weightless F(0).
CriticalityVerdict is_critical(const PrecoloredGraph& g, const SolveOptions& options = {});

}  // namespace ifk
