#include "mergegram/mst.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mergegram/error.hpp"

namespace mergegram {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

void UnionFind::check(std::size_t i) const {
  if (i >= parent_.size()) {
    throw Error("union-find index " + std::to_string(i) + " out of range");
  }
}

std::size_t UnionFind::find(std::size_t i) {
  check(i);
  std::size_t root = i;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[i] != root) {
    const std::size_t next = parent_[i];
    parent_[i] = root;
    i = next;
  }
  return root;
}

std::size_t UnionFind::unite(std::size_t i, std::size_t j) {
  std::size_t a = find(i);
  std::size_t b = find(j);
  if (a == b) return a;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return a;
}

double Mst::total_length() const {
  double total = 0.0;
  for (const Edge& e : edges) total += e.length;
  return total;
}

bool edge_less(const Edge& a, const Edge& b) {
  if (a.length != b.length) return a.length < b.length;
  const auto ka = std::minmax(a.u, a.v);
  const auto kb = std::minmax(b.u, b.v);
  return ka < kb;
}

Mst compute_mst(const MetricInput& metric) {
  const std::size_t n = metric.size();
  if (n == 0) throw Error("empty input");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, kInf);
  std::vector<std::size_t> link(n, 0);

  Mst mst;
  mst.n = n;
  mst.edges.reserve(n - 1);

  std::size_t current = 0;
  in_tree[0] = true;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double d = metric.distance(current, v);
      if (d < best[v]) {
        best[v] = d;
        link[v] = current;
      }
      if (next == n || best[v] < best[next]) next = v;
    }
    in_tree[next] = true;
    mst.edges.push_back({std::min(next, link[next]), std::max(next, link[next]), best[next]});
    current = next;
  }
  std::sort(mst.edges.begin(), mst.edges.end(), edge_less);
  return mst;
}

bool is_spanning_tree(const Mst& mst) {
  if (mst.n == 0 || mst.edges.size() + 1 != mst.n) return false;
  UnionFind uf(mst.n);
  for (std::size_t i = 0; i < mst.edges.size(); ++i) {
    const Edge& e = mst.edges[i];
    if (e.u == e.v || e.u >= mst.n || e.v >= mst.n || !(e.length >= 0.0)) return false;
    if (i > 0 && edge_less(e, mst.edges[i - 1])) return false;
    if (uf.find(e.u) == uf.find(e.v)) return false;
    uf.unite(e.u, e.v);
  }
  return uf.component_count() == 1;
}

}  // namespace mergegram
