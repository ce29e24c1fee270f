#include "ifk/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace ifk {

FlowNetwork::FlowNetwork(std::size_t nodes, Node source, Node sink)
    : nodes_(nodes), source_(source), sink_(sink) {
  check_node(source);
  check_node(sink);
  if (source == sink) throw std::invalid_argument("source and sink coincide");
}

FlowNetwork::Node FlowNetwork::add_node() { return static_cast<Node>(nodes_++); }

void FlowNetwork::check_node(Node n) const {
  if (n >= nodes_) throw std::invalid_argument("unknown flow node " + std::to_string(n));
}

void FlowNetwork::add_arc(Node from, Node to, std::int64_t capacity) {
  check_node(from);
  check_node(to);
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  if (__builtin_add_overflow(finite_total_, capacity, &finite_total_) ||
      finite_total_ == std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("total capacity overflows");
  }
  arcs_.push_back({from, to, capacity});
}

void FlowNetwork::add_infinite_arc(Node from, Node to) {
  check_node(from);
  check_node(to);
  arcs_.push_back({from, to, -1});
}

std::int64_t FlowNetwork::infinite_capacity() const { return finite_total_ + 1; }

namespace {

// Dinic's algorithm on a residual graph stored as paired forward/backward arcs.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net) : head_(net.node_count(), -1), level_(net.node_count()) {
    const std::int64_t inf = net.infinite_capacity();
    for (const auto& arc : net.arcs()) {
      add(arc.from, arc.to, arc.capacity < 0 ? inf : arc.capacity);
    }
  }

  std::int64_t run(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
        int w = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  void add(int u, int v, std::int64_t c) {
    push(u, v, c);
    push(v, u, 0);
  }
  void push(int u, int v, std::int64_t c) {
    to_.push_back(v);
    cap_.push_back(c);
    next_.push_back(head_[static_cast<std::size_t>(u)]);
    head_[static_cast<std::size_t>(u)] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
        int w = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(w)] < 0) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& e = iter_[static_cast<std::size_t>(u)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
      const auto ue = static_cast<std::size_t>(e);
      int w = to_[ue];
      if (cap_[ue] <= 0 || level_[static_cast<std::size_t>(w)] != level_[static_cast<std::size_t>(u)] + 1) continue;
      std::int64_t pushed = dfs(w, t, std::min(limit, cap_[ue]));
      if (pushed > 0) {
        cap_[ue] -= pushed;
        cap_[ue ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<std::int64_t> cap_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  Dinic dinic(net);
  MaxFlowResult out;
  out.value = dinic.run(static_cast<int>(net.source()), static_cast<int>(net.sink()));
  out.source_side = dinic.reachable(static_cast<int>(net.source()));
  return out;
}

}  // namespace ifk
