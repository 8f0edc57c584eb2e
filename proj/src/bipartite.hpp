#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace mergegram::detail {

/// Hopcroft-Karp maximum matching on a bipartite graph given as adjacency
/// lists from left vertices to right vertices.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t n_left, std::size_t n_right)
      : adj_(n_left), n_right_(n_right) {}

  void add_edge(std::size_t left, std::size_t right) { adj_[left].push_back(right); }

  std::size_t max_matching() {
    const std::size_t n_left = adj_.size();
    match_left_.assign(n_left, kNone);
    match_right_.assign(n_right_, kNone);
    dist_.assign(n_left, 0);
    std::size_t matched = 0;
    while (bfs()) {
      it_.assign(n_left, 0);
      for (std::size_t u = 0; u < n_left; ++u) {
        if (match_left_[u] == kNone && dfs(u)) ++matched;
      }
    }
    return matched;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> queue;
    bool reachable_free = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kNone) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kNone;
      }
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kNone) {
          reachable_free = true;
        } else if (dist_[w] == kNone) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(std::size_t u) {
    for (; it_[u] < adj_[u].size(); ++it_[u]) {
      const std::size_t v = adj_[u][it_[u]];
      const std::size_t w = match_right_[v];
      if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        ++it_[u];
        return true;
      }
    }
    dist_[u] = kNone;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::size_t n_right_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> it_;
};

}  // namespace mergegram::detail
