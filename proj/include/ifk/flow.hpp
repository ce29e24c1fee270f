#pragma once

#include <cstdint>
#include <vector>

namespace ifk {

/// Directed network with integral capacities. Arcs added with
/// add_infinite_arc() receive the sentinel 1 + (sum of finite capacities) when
/// the flow is computed, so they can never be saturated by a minimum cut.
class FlowNetwork {
 public:
  using Node = std::uint32_t;

  FlowNetwork(std::size_t nodes, Node source, Node sink);

  Node add_node();
  /// Throws std::invalid_argument for negative capacities or unknown nodes.
  void add_arc(Node from, Node to, std::int64_t capacity);
  void add_infinite_arc(Node from, Node to);

  std::size_t node_count() const { return nodes_; }
  Node source() const { return source_; }
  Node sink() const { return sink_; }
  std::int64_t infinite_capacity() const;

  struct Arc {
    Node from;
    Node to;
    std::int64_t capacity;  // negative marks an infinite arc
  };
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  void check_node(Node n) const;

  std::size_t nodes_;
  Node source_;
  Node sink_;
  std::vector<Arc> arcs_;
  std::int64_t finite_total_ = 0;
};

struct MaxFlowResult {
  std::int64_t value = 0;
  /// Nodes reachable from the source in the final residual graph: the unique
  /// inclusion-minimal minimum cut.
  std::vector<bool> source_side;
};

MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace ifk
