#include "ifk/solver.hpp"

#include <algorithm>
#include <numeric>

#include "ifk/rollback_dsu.hpp"

namespace ifk {
namespace {

class Search {
 public:
  enum class Outcome { Continue, Stop, Budget };

  Search(const PrecoloredGraph& g, const SolveOptions& options)
      : g_(g),
        k_(g.k()),
        max_nodes_(options.max_nodes),
        label_(g.vertex_count(), kUnset),
        fweight_(g.vertex_count(), 0),
        dsu_(g.vertex_count()),
        order_(g.vertex_count()) {
    const Graph& graph = g.graph();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.state(v).kind != StateKind::I) fweight_[v] = f_weight(g.state(v));
    }
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return graph.degree(a) > graph.degree(b);
    });
  }

  /// Applies the precoloring and initial propagation; false on contradiction.
  bool init() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (g_.state(v).kind != StateKind::F) continue;
      if (!can_be_f(v)) return false;
      assign(v, kF);
    }
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (g_.state(v).kind != StateKind::I) continue;
      if (has_i_neighbor(v)) return false;
      assign(v, kI);
    }
    return propagate();
  }

  template <class Leaf>
  Outcome dfs(std::size_t pos, Leaf& leaf) {
    while (pos < order_.size() && label_[order_[pos]] != kUnset) ++pos;
    if (pos == order_.size()) return leaf(current()) ? Outcome::Continue : Outcome::Stop;
    const Vertex v = order_[pos];
    for (std::int8_t choice : {kF, kI}) {
      if (choice == kF ? !can_be_f(v) : has_i_neighbor(v)) continue;
      ++nodes_;
      if (max_nodes_ != 0 && nodes_ > max_nodes_) return Outcome::Budget;
      const Mark m = mark();
      assign(v, choice);
      if (propagate()) {
        Outcome r = dfs(pos + 1, leaf);
        if (r != Outcome::Continue) {
          undo(m);
          return r;
        }
      }
      undo(m);
    }
    return Outcome::Continue;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::int8_t kUnset = -1;
  static constexpr std::int8_t kI = 0;
  static constexpr std::int8_t kF = 1;

  struct Mark {
    std::size_t trail;
    std::size_t dsu;
  };

  // F is allowed when v's F-neighbours lie in distinct components (no cycle)
  // and the merged weight stays within k.
  bool can_be_f(Vertex v) const {
    std::int64_t total = fweight_[v];
    if (total > k_) return false;
    roots_.clear();
    for (Vertex w : g_.graph().neighbors(v)) {
      if (label_[w] != kF) continue;
      Vertex r = dsu_.find(w);
      if (std::find(roots_.begin(), roots_.end(), r) != roots_.end()) return false;
      roots_.push_back(r);
      total += dsu_.weight(r);
      if (total > k_) return false;
    }
    return true;
  }

  bool has_i_neighbor(Vertex v) const {
    for (Vertex w : g_.graph().neighbors(v)) {
      if (label_[w] == kI) return true;
    }
    return false;
  }

  void assign(Vertex v, std::int8_t choice) {
    label_[v] = choice;
    trail_.push_back(v);
    if (choice == kF) {
      dsu_.add_weight(v, fweight_[v]);
      for (Vertex w : g_.graph().neighbors(v)) {
        if (label_[w] == kF) dsu_.unite(v, w);
      }
    }
  }

  // Forced moves to a fixpoint; false on a vertex with no legal label.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v : order_) {
        if (label_[v] != kUnset) continue;
        const bool next_to_i = has_i_neighbor(v);
        const bool f_ok = can_be_f(v);
        if (next_to_i && !f_ok) return false;
        if (next_to_i) {
          assign(v, kF);
          changed = true;
        } else if (!f_ok) {
          assign(v, kI);
          changed = true;
        }
      }
    }
    return true;
  }

  Mark mark() const { return {trail_.size(), dsu_.checkpoint()}; }

  void undo(const Mark& m) {
    while (trail_.size() > m.trail) {
      label_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
    dsu_.rollback(m.dsu);
  }

  Coloring current() const {
    Coloring c;
    c.labels.reserve(label_.size());
    for (std::int8_t l : label_) c.labels.push_back(l == kI ? Label::I : Label::F);
    return c;
  }

  const PrecoloredGraph& g_;
  const std::int64_t k_;
  const std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int8_t> label_;
  std::vector<std::int64_t> fweight_;
  RollbackDsu dsu_;
  std::vector<Vertex> order_;
  std::vector<Vertex> trail_;
  mutable std::vector<Vertex> roots_;
};

}  // namespace

SolveResult solve(const PrecoloredGraph& g, const SolveOptions& options) {
  SolveResult result;
  Search search(g, options);
  if (!search.init()) return result;
  auto leaf = [&](Coloring c) {
    result.coloring = std::move(c);
    return false;
  };
  auto outcome = search.dfs(0, leaf);
  result.nodes = search.nodes();
  if (result.coloring) {
    result.status = SolveStatus::Feasible;
  } else if (outcome == Search::Outcome::Budget) {
    result.status = SolveStatus::BudgetExceeded;
  }
  return result;
}

EnumerationStatus for_each_coloring(const PrecoloredGraph& g,
                                    const std::function<bool(const Coloring&)>& visit,
                                    const SolveOptions& options) {
  Search search(g, options);
  if (!search.init()) return EnumerationStatus::Complete;
  auto leaf = [&](const Coloring& c) { return visit(c); };
  switch (search.dfs(0, leaf)) {
    case Search::Outcome::Continue: return EnumerationStatus::Complete;
    case Search::Outcome::Stop: return EnumerationStatus::Stopped;
    case Search::Outcome::Budget: return EnumerationStatus::BudgetExceeded;
  }
  return EnumerationStatus::Complete;
}

CriticalityVerdict is_critical(const PrecoloredGraph& g, const SolveOptions& options) {
  using Reason = CriticalityVerdict::Reason;
  CriticalityVerdict verdict;
  auto budget = [&]() {
    verdict.is_critical = false;
    verdict.reason = Reason::BudgetExceeded;
    return verdict;
  };

  auto whole = solve(g, options);
  if (whole.status == SolveStatus::BudgetExceeded) return budget();
  if (whole.status == SolveStatus::Feasible) {
    verdict.reason = Reason::Colorable;
    verdict.coloring = std::move(whole.coloring);
    return verdict;
  }

  // Colorability is monotone under taking subgraphs, so single deletions
  // cover every proper subgraph.
  for (const Edge& e : g.graph().edges()) {
    auto r = solve(delete_edge(g, e), options);
    if (r.status == SolveStatus::BudgetExceeded) return budget();
    if (r.status == SolveStatus::Infeasible) {
      verdict.reason = Reason::EdgeDeletionInfeasible;
      verdict.edge = e;
      return verdict;
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto r = solve(delete_vertex(g, v).graph, options);
    if (r.status == SolveStatus::BudgetExceeded) return budget();
    if (r.status == SolveStatus::Infeasible) {
      verdict.reason = Reason::VertexDeletionInfeasible;
      verdict.vertex = v;
      return verdict;
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const VertexState& s = g.state(v);
    if (s.kind == StateKind::I || s.j == 0) continue;
    auto r = solve(g.decrement(v), options);
    if (r.status == SolveStatus::BudgetExceeded) return budget();
    if (r.status == SolveStatus::Infeasible) {
      verdict.reason = Reason::DecrementInfeasible;
      verdict.vertex = v;
      return verdict;
    }
  }
  verdict.is_critical = true;
  verdict.reason = Reason::Critical;
  return verdict;
}

std::string CriticalityVerdict::describe() const {
  switch (reason) {
    case Reason::Critical: return "critical";
    case Reason::Colorable: return "not critical: colorable";
    case Reason::EdgeDeletionInfeasible:
      return "not critical: deleting edge " + std::to_string(edge->u) + " " +
             std::to_string(edge->v) + " leaves an uncolorable graph";
    case Reason::VertexDeletionInfeasible:
      return "not critical: deleting vertex " + std::to_string(*vertex) +
             " leaves an uncolorable graph";
    case Reason::DecrementInfeasible:
      return "not critical: decrementing vertex " + std::to_string(*vertex) +
             " leaves an uncolorable graph";
    case Reason::BudgetExceeded: return "budget exceeded";
  }
  return "unknown";
}

}  // namespace ifk
