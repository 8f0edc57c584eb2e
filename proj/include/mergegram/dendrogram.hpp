#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "mergegram/mst.hpp"

namespace mergegram {

using ClusterId = std::size_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// At `scale`, the clusters in `merged` (two or more) fuse into `created`.
struct MergeEvent {
  double scale = 0.0;
  std::vector<ClusterId> merged;
  ClusterId created = 0;

  friend bool operator==(const MergeEvent&, const MergeEvent&) = default;
};

/// Dendrogram of merge sets over a finite set.
///
/// Leaves 0..n_leaves-1 are the blocks of the partition at scale 0, all born
/// at 0. Each event creates the next dense id, so the cluster created by
/// events[k] is n_leaves + k. Several events may share a scale when they
/// merge disjoint groups; what may not happen is a cluster created at scale
/// s taking part in another merge at the same s (such merges must be
/// coalesced into one k-way event).
struct Dendrogram {
  std::size_t n_leaves = 0;
  std::vector<MergeEvent> events;

  std::size_t cluster_count() const { return n_leaves + events.size(); }

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;
};

/// Life interval [birth, death) of one merge set.
struct MergeSetLife {
  ClusterId cluster = 0;
  double birth = 0.0;
  double death = kInfinity;

  friend bool operator==(const MergeSetLife&, const MergeSetLife&) = default;
};

struct Violation {
  enum class Kind {
    kNotSingleBlock,  // final partition has more than one block
    kNotCoarsening,   // a cluster is missing, reused, split or out of order
    kScaleOrder,      // scales decrease, are invalid, or a merge was not coalesced
  };
  Kind kind;
  std::string message;
};

/// Merge events of the single-linkage dendrogram, at scale_factor * length
/// of each MST edge. Tied scales that chain into one cluster coalesce into a
/// single k-way event.
Dendrogram sl_dendrogram(const Mst& mst, double scale_factor = 0.5);

/// Empty result means the dendrogram is valid.
std::vector<Violation> validate_dendrogram(const Dendrogram& d);

/// One record per cluster id, ordered by id. Throws on invalid input.
std::vector<MergeSetLife> merge_set_lives(const Dendrogram& d);

}  // namespace mergegram
