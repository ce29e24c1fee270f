#pragma once

#include <cstdint>
#include <vector>

#include "ifk/graph.hpp"

namespace ifk {

/// Disjoint sets with a per-set integer weight and undo back to a checkpoint.
/// Union by size, no path compression, so every change is a constant number
/// of recorded writes.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1), weight_(n, 0) {
    for (std::size_t v = 0; v < n; ++v) parent_[v] = static_cast<Vertex>(v);
  }

  Vertex find(Vertex v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  std::int64_t weight(Vertex v) const { return weight_[find(v)]; }
  std::uint32_t size(Vertex v) const { return size_[find(v)]; }

  void add_weight(Vertex v, std::int64_t delta) {
    Vertex r = find(v);
    save(r);
    weight_[r] += delta;
  }

  /// Returns false (and records nothing) when already joined.
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b] || (size_[a] == size_[b] && a > b)) std::swap(a, b);
    save(a);
    save(b);
    parent_[b] = a;
    size_[a] += size_[b];
    weight_[a] += weight_[b];
    return true;
  }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      const Record& r = history_.back();
      parent_[r.v] = r.parent;
      size_[r.v] = r.size;
      weight_[r.v] = r.weight;
      history_.pop_back();
    }
  }

 private:
  struct Record {
    Vertex v;
    Vertex parent;
    std::uint32_t size;
    std::int64_t weight;
  };

  void save(Vertex v) { history_.push_back({v, parent_[v], size_[v], weight_[v]}); }

  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::int64_t> weight_;
  std::vector<Record> history_;
};

}  // namespace ifk
