#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

#include "mergegram/dendrogram.hpp"
#include "mergegram/mst.hpp"

namespace mergegram {

/// A point (birth, death) of a diagram. death may be +inf; birth is finite.
struct Dot {
  double birth = 0.0;
  double death = 0.0;

  bool is_infinite() const { return death == kInfinity; }
  /// L-infinity distance to the diagonal.
  double diagonal_distance() const { return (death - birth) / 2.0; }

  friend auto operator<=>(const Dot&, const Dot&) = default;
};

/// Multiset of dots with positive multiplicities, iterated in (birth, death)
/// order. Used for mergegrams, 0D persistence diagrams and NN(2) diagrams.
class Diagram {
 public:
  using Map = std::map<Dot, std::size_t>;

  Diagram() = default;
  /// Each entry is one copy; repeats accumulate.
  Diagram(std::initializer_list<Dot> dots);

  void add(Dot dot, std::size_t count = 1);
  /// Removes `count` copies; throws if fewer are present.
  void remove(Dot dot, std::size_t count = 1);

  std::size_t multiplicity(Dot dot) const;
  /// Number of distinct dots.
  std::size_t distinct() const { return dots_.size(); }
  /// Sum of multiplicities.
  std::size_t total() const { return total_; }
  std::size_t infinite_count() const;
  bool empty() const { return dots_.empty(); }

  Map::const_iterator begin() const { return dots_.begin(); }
  Map::const_iterator end() const { return dots_.end(); }

  /// Every dot repeated by multiplicity, in canonical order.
  std::vector<Dot> expanded() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Map dots_;
  std::size_t total_ = 0;
};

Diagram add(const Diagram& a, const Diagram& b);

/// Multiset difference a - b. Each dot of b is removed from a dot of a within
/// `tol` in both coordinates (exact matches preferred). Throws on underflow.
Diagram subtract(const Diagram& a, const Diagram& b, double tol = 0.0);

/// Multiset equality up to `tol` per coordinate with exact multiplicities.
bool equals(const Diagram& a, const Diagram& b, double tol = 0.0);

/// Mergegram by a single union-find sweep over the sorted MST edges. Each
/// merge of two components emits (prev birth, scale) for both; the component
/// left at the end contributes (last scale, inf). With drop_zero_life, dots
/// with birth == death (tied edges) are discarded.
Diagram mergegram_from_mst(const Mst& mst, double scale_factor = 0.5, bool drop_zero_life = true);

/// One dot per merge set of a valid dendrogram; zero-life records (merges at
/// scale 0 of coincident points) are discarded.
Diagram mergegram_from_dendrogram(const Dendrogram& d);

/// {(0, scale_factor * l)} over MST edges plus (0, inf). Dots on the
/// diagonal (zero-length edges) are omitted.
Diagram pd0_from_mst(const Mst& mst, double scale_factor = 0.5);

/// 0D persistence recovered from a mergegram: multiplicity of (0, s) is the
/// number of deaths at s minus the number of births at s, for s > 0.
Diagram pd0_from_mergegram(const Diagram& mergegram);

/// (0, s) with multiplicity k - 1 for every k-way merge at s > 0, plus (0, inf).
Diagram pd0_from_dendrogram(const Dendrogram& d);

}  // namespace mergegram
