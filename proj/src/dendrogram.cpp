#include "mergegram/dendrogram.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mergegram/error.hpp"

namespace mergegram {

Dendrogram sl_dendrogram(const Mst& mst, double scale_factor) {
  if (!(scale_factor > 0.0) || !std::isfinite(scale_factor)) {
    throw Error("scale factor must be positive");
  }
  if (!is_spanning_tree(mst)) throw Error("invalid MST");

  Dendrogram d;
  d.n_leaves = mst.n;

  UnionFind points(mst.n);
  // Cluster id currently represented by each point-set root.
  std::vector<ClusterId> cluster_of(mst.n);
  for (std::size_t i = 0; i < mst.n; ++i) cluster_of[i] = i;

  const auto& edges = mst.edges;
  std::size_t begin = 0;
  while (begin < edges.size()) {
    const double scale = scale_factor * edges[begin].length;
    std::size_t end = begin;
    while (end < edges.size() && scale_factor * edges[end].length == scale) ++end;

    // The batch edges, taken over the clusters alive before the batch, fall
    // into connected groups; each group becomes one event.
    std::vector<std::pair<ClusterId, ClusterId>> ends;
    for (std::size_t k = begin; k < end; ++k) {
      ends.emplace_back(cluster_of[points.find(edges[k].u)], cluster_of[points.find(edges[k].v)]);
    }
    for (std::size_t k = begin; k < end; ++k) points.unite(edges[k].u, edges[k].v);

    // root after the batch -> (first edge index, merged clusters)
    std::map<std::size_t, std::pair<std::size_t, std::vector<ClusterId>>> groups;
    for (std::size_t k = begin; k < end; ++k) {
      auto it = groups.try_emplace(points.find(edges[k].u), k, std::vector<ClusterId>{}).first;
      it->second.second.push_back(ends[k - begin].first);
      it->second.second.push_back(ends[k - begin].second);
    }

    std::vector<std::pair<std::size_t, std::vector<ClusterId>>> ordered;
    for (auto& [root, group] : groups) ordered.push_back(std::move(group));
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (auto& [first_edge, merged] : ordered) {
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      const ClusterId created = d.cluster_count();
      d.events.push_back({scale, merged, created});
      cluster_of[points.find(edges[first_edge].u)] = created;
    }
    begin = end;
  }
  return d;
}

std::vector<Violation> validate_dendrogram(const Dendrogram& d) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  if (d.n_leaves == 0) {
    out.push_back({Kind::kNotSingleBlock, "dendrogram has no leaves"});
    return out;
  }

  const std::size_t total = d.cluster_count();
  std::vector<double> birth(total, 0.0);
  std::vector<bool> consumed(total, false);
  std::size_t alive = d.n_leaves;
  double previous = 0.0;

  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const MergeEvent& e = d.events[k];
    const std::string where = "event " + std::to_string(k) + ": ";
    const ClusterId expected = d.n_leaves + k;

    if (!std::isfinite(e.scale) || e.scale < 0.0) {
      out.push_back({Kind::kScaleOrder, where + "scale must be finite and nonnegative"});
    } else if (e.scale < previous) {
      out.push_back({Kind::kScaleOrder, where + "scales must be nondecreasing"});
    }
    if (e.created != expected) {
      out.push_back({Kind::kNotCoarsening, where + "created id must be " + std::to_string(expected)});
    }
    if (e.merged.size() < 2) {
      out.push_back({Kind::kNotCoarsening, where + "a merge needs at least two clusters"});
    }
    std::vector<ClusterId> ids = e.merged;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      out.push_back({Kind::kNotCoarsening, where + "merged ids repeat"});
    }
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (ClusterId id : ids) {
      if (id >= expected) {
        out.push_back({Kind::kNotCoarsening,
                       where + "cluster " + std::to_string(id) + " does not exist yet"});
        continue;
      }
      if (consumed[id]) {
        out.push_back({Kind::kNotCoarsening,
                       where + "cluster " + std::to_string(id) + " was already merged"});
        continue;
      }
      consumed[id] = true;
      --alive;
      if (id >= d.n_leaves && birth[id] == e.scale) {
        out.push_back({Kind::kScaleOrder, where + "cluster " + std::to_string(id) +
                                              " is merged at its own birth scale"});
      }
    }
    if (expected < total) birth[expected] = e.scale;
    ++alive;
    if (std::isfinite(e.scale)) previous = std::max(previous, e.scale);
  }

  if (alive != 1) {
    out.push_back({Kind::kNotSingleBlock,
                   std::to_string(alive) + " clusters remain after the last merge"});
  }
  return out;
}

std::vector<MergeSetLife> merge_set_lives(const Dendrogram& d) {
  const auto violations = validate_dendrogram(d);
  if (!violations.empty()) throw Error("invalid dendrogram: " + violations.front().message);

  std::vector<MergeSetLife> lives(d.cluster_count());
  for (ClusterId id = 0; id < lives.size(); ++id) lives[id].cluster = id;
  for (const MergeEvent& e : d.events) {
    lives[e.created].birth = e.scale;
    for (ClusterId id : e.merged) lives[id].death = e.scale;
  }
  return lives;
}

}  // namespace mergegram
