#pragma once

#include <cstddef>
#include <vector>

#include "mergegram/metric.hpp"

namespace mergegram {

/// Disjoint sets with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t size() const { return parent_.size(); }
  std::size_t component_count() const { return components_; }

  std::size_t find(std::size_t i);

  /// Merges the sets of i and j and returns the surviving root. A no-op
  /// (returning the shared root) when they are already joined.
  std::size_t unite(std::size_t i, std::size_t j);

 private:
  void check(std::size_t i) const;

  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

struct Edge {
  std::size_t u;
  std::size_t v;
  double length;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Minimum spanning tree with edges sorted by (length, min endpoint, max endpoint).
struct Mst {
  std::size_t n = 0;
  std::vector<Edge> edges;

  double total_length() const;
};

/// Orders edges by (length, min index, max index).
bool edge_less(const Edge& a, const Edge& b);

/// Dense O(n^2) Prim over the metric. Throws on empty input.
Mst compute_mst(const MetricInput& metric);

/// Checks the structural invariants: n-1 edges, u != v, sorted, spanning.
bool is_spanning_tree(const Mst& mst);

}  // namespace mergegram
