#include "mergegram/dendrogram.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mergegram/error.hpp"
#include "unit/oracles.hpp"

namespace mergegram {
namespace {

using Kind = Violation::Kind;

/// Three leaves: {0,1} merge at 1, then with {2} at 2.
Dendrogram three_leaf() { return {3, {{1.0, {0, 1}, 3}, {2.0, {2, 3}, 4}}}; }

bool has(const std::vector<Violation>& v, Kind kind) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == kind; });
}

/// Point labels (smallest point index per block) after replaying every event
/// with scale <= s.
std::vector<std::size_t> partition_at(const Dendrogram& d, double s) {
  std::vector<std::set<std::size_t>> members(d.cluster_count());
  for (std::size_t i = 0; i < d.n_leaves; ++i) members[i] = {i};
  std::vector<bool> alive(d.cluster_count(), false);
  std::fill(alive.begin(), alive.begin() + static_cast<std::ptrdiff_t>(d.n_leaves), true);
  for (const MergeEvent& e : d.events) {
    if (e.scale > s) break;
    for (ClusterId id : e.merged) {
      members[e.created].insert(members[id].begin(), members[id].end());
      alive[id] = false;
    }
    alive[e.created] = true;
  }
  std::vector<std::size_t> label(d.n_leaves);
  for (std::size_t c = 0; c < members.size(); ++c) {
    if (!alive[c]) continue;
    for (std::size_t p : members[c]) label[p] = *members[c].begin();
  }
  return label;
}

TEST(SlDendrogram, FivePointLine) {
  const Dendrogram d = sl_dendrogram(compute_mst(PointCloud::line({0, 4, 6, 9, 10})), 0.5);
  EXPECT_EQ(d.n_leaves, 5u);
  const std::vector<MergeEvent> expected{
      {0.5, {3, 4}, 5}, {1.0, {1, 2}, 6}, {1.5, {5, 6}, 7}, {2.0, {0, 7}, 8}};
  EXPECT_EQ(d.events, expected);
  EXPECT_TRUE(validate_dendrogram(d).empty());
}

TEST(SlDendrogram, SinglePoint) {
  const Dendrogram d = sl_dendrogram(compute_mst(PointCloud::line({1})));
  EXPECT_EQ(d.n_leaves, 1u);
  EXPECT_TRUE(d.events.empty());
  EXPECT_TRUE(validate_dendrogram(d).empty());
}

TEST(SlDendrogram, TiedEdgesCoalesce) {
  const Dendrogram d = sl_dendrogram(compute_mst(PointCloud::line({0, 1, 2})), 0.5);
  ASSERT_EQ(d.events.size(), 1u);
  EXPECT_EQ(d.events[0], (MergeEvent{0.5, {0, 1, 2}, 3}));
}

TEST(SlDendrogram, DisjointTiesStaySeparate) {
  const Dendrogram d = sl_dendrogram(compute_mst(PointCloud::line({0, 1, 5, 6})), 0.5);
  const std::vector<MergeEvent> expected{{0.5, {0, 1}, 4}, {0.5, {2, 3}, 5}, {2.0, {4, 5}, 6}};
  EXPECT_EQ(d.events, expected);
  EXPECT_TRUE(validate_dendrogram(d).empty());
}

TEST(SlDendrogram, ChainedTiesJoinPreviousClusters) {
  // 0-1 at 1, 5-6 at 1; then at 4 the clusters {0,1}, {5,6} and the point 10
  // fuse through two tied edges (1-5 and 6-10).
  const Dendrogram d = sl_dendrogram(compute_mst(PointCloud::line({0, 1, 5, 6, 10})), 1.0);
  const std::vector<MergeEvent> expected{{1.0, {0, 1}, 5}, {1.0, {2, 3}, 6}, {4.0, {4, 5, 6}, 7}};
  EXPECT_EQ(d.events, expected);
}

TEST(SlDendrogram, ScaleFactorOne) {
  const Dendrogram d = sl_dendrogram(compute_mst(PointCloud::line({0, 4, 6, 9, 10})), 1.0);
  std::vector<double> scales;
  for (const auto& e : d.events) scales.push_back(e.scale);
  EXPECT_EQ(scales, (std::vector<double>{1, 2, 3, 4}));
  EXPECT_THROW(sl_dendrogram(compute_mst(PointCloud::line({0, 1})), 0.0), Error);
}

TEST(SlDendrogram, PartitionsMatchChainDefinition) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 40);
    const std::size_t dim = 1 + trial % 5;
    // Coarse integer grid so that ties actually occur.
    PointCloud cloud(dim);
    std::vector<double> p(dim);
    for (std::size_t i = 0; i < n; ++i) {
      for (double& x : p) x = static_cast<double>(rng.uniform_int(0, 6));
      cloud.push_back(p);
    }
    const MetricInput metric = cloud;
    const double factor = trial % 2 == 0 ? 0.5 : 1.0;
    const Dendrogram d = sl_dendrogram(compute_mst(metric), factor);
    ASSERT_TRUE(validate_dendrogram(d).empty());

    std::set<double> scales{0.0};
    for (const auto& e : d.events) scales.insert(e.scale);
    for (double s : scales) {
      EXPECT_EQ(partition_at(d, s), oracle::sl_partition(metric, s / factor)) << "scale " << s;
    }
    // Scales are exactly factor * the distinct MST edge lengths.
    std::set<double> from_edges;
    for (const Edge& e : compute_mst(metric).edges) from_edges.insert(factor * e.length);
    std::set<double> event_scales;
    for (const auto& e : d.events) event_scales.insert(e.scale);
    EXPECT_EQ(event_scales, from_edges);

    const auto lives = merge_set_lives(d);
    EXPECT_EQ(lives.size(), d.n_leaves + d.events.size());
    EXPECT_EQ(std::count_if(lives.begin(), lives.end(),
                            [](const MergeSetLife& l) { return l.death == kInfinity; }),
              1);
  }
}

TEST(MergeSetLives, ThreeLeafExample) {
  const auto lives = merge_set_lives(three_leaf());
  const std::vector<MergeSetLife> expected{
      {0, 0, 1}, {1, 0, 1}, {2, 0, 2}, {3, 1, 2}, {4, 2, kInfinity}};
  EXPECT_EQ(lives, expected);
}

TEST(MergeSetLives, SingleLeaf) {
  const auto lives = merge_set_lives(Dendrogram{1, {}});
  ASSERT_EQ(lives.size(), 1u);
  EXPECT_EQ(lives[0], (MergeSetLife{0, 0, kInfinity}));
}

TEST(MergeSetLives, FivePointShortestPathSpace) {
  const Dendrogram d = sl_dendrogram(compute_mst(oracle::five_point_matrix()), 0.5);
  std::multiset<std::pair<double, double>> got;
  for (const auto& l : merge_set_lives(d)) got.insert({l.birth, l.death});
  const std::multiset<std::pair<double, double>> expected{
      {0, 1.5}, {0, 1.5}, {0, 2}, {0, 2}, {0, 3}, {1.5, 2.5}, {2, 2.5}, {2.5, 3}, {3, kInfinity}};
  EXPECT_EQ(got, expected);
}

TEST(MergeSetLives, InvalidDendrogramThrows) {
  EXPECT_THROW(merge_set_lives(Dendrogram{2, {}}), Error);
}

TEST(Validate, ThreeLeafIsValid) { EXPECT_TRUE(validate_dendrogram(three_leaf()).empty()); }

TEST(Validate, ReusedClusterIsNotCoarsening) {
  Dendrogram d{3, {{1.0, {0, 1}, 3}, {2.0, {0, 2}, 4}}};
  EXPECT_TRUE(has(validate_dendrogram(d), Kind::kNotCoarsening));
}

TEST(Validate, TwoSurvivorsIsNotSingleBlock) {
  Dendrogram d{3, {{1.0, {0, 1}, 3}}};
  const auto v = validate_dendrogram(d);
  EXPECT_TRUE(has(v, Kind::kNotSingleBlock));
  EXPECT_FALSE(has(v, Kind::kNotCoarsening));
}

TEST(Validate, UncoalescedMergeIsScaleViolation) {
  Dendrogram d{3, {{1.0, {0, 1}, 3}, {1.0, {2, 3}, 4}}};
  EXPECT_TRUE(has(validate_dendrogram(d), Kind::kScaleOrder));
}

TEST(Validate, DecreasingScalesAndBadIds) {
  EXPECT_TRUE(has(validate_dendrogram({3, {{2.0, {0, 1}, 3}, {1.0, {2, 3}, 4}}}), Kind::kScaleOrder));
  EXPECT_TRUE(has(validate_dendrogram({3, {{1.0, {0, 1}, 7}, {2.0, {2, 3}, 4}}}), Kind::kNotCoarsening));
  EXPECT_TRUE(has(validate_dendrogram({2, {{1.0, {0}, 2}}}), Kind::kNotCoarsening));
  EXPECT_TRUE(has(validate_dendrogram({2, {{1.0, {0, 0, 1}, 2}}}), Kind::kNotCoarsening));
  EXPECT_TRUE(has(validate_dendrogram({0, {}}), Kind::kNotSingleBlock));
}

}  // namespace
}  // namespace mergegram
