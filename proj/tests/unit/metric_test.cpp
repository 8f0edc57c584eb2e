#include "mergegram/metric.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "mergegram/error.hpp"

namespace mergegram {
namespace {

TEST(DistanceMatrix, PythagoreanPair) {
  const PointCloud cloud(2, {0, 0, 3, 4});
  const auto d = distance_matrix(cloud);
  EXPECT_EQ(d(0, 1), 5.0);
  EXPECT_EQ(d(1, 0), 5.0);
  EXPECT_EQ(d(0, 0), 0.0);
}

TEST(DistanceMatrix, LineAbsoluteDifferences) {
  const auto d = distance_matrix(PointCloud::line({0, 4, 6, 9, 10}));
  EXPECT_EQ(d(3, 4), 1.0);
  EXPECT_EQ(d(0, 4), 10.0);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(d(i, j), d(j, i));
  }
}

TEST(DistanceMatrix, SinglePoint) {
  const auto d = distance_matrix(PointCloud::line({7}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d(0, 0), 0.0);
}

TEST(DistanceMatrix, EmptyCloudIsAnError) {
  EXPECT_THROW(distance_matrix(PointCloud(3)), Error);
}

TEST(DistanceMatrix, RejectsAsymmetryAndNegatives) {
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 2, 0}), Error);
  EXPECT_THROW(DistanceMatrix(2, {0, -1, -1, 0}), Error);
  EXPECT_THROW(DistanceMatrix(2, {1, 1, 1, 0}), Error);
  // Triangle inequality is not enforced.
  EXPECT_NO_THROW(DistanceMatrix(3, {0, 1, 10, 1, 0, 1, 10, 1, 0}));
}

TEST(PointCloud, RejectsRaggedAndNonFinite) {
  EXPECT_THROW(PointCloud(2, {1, 2, 3}), Error);
  EXPECT_THROW(PointCloud(1, {NAN}), Error);
  EXPECT_THROW(PointCloud(0), Error);
}

TEST(Hausdorff, Examples) {
  const MetricInput line = PointCloud::line({0, 3});
  const std::size_t zero[] = {0};
  const std::size_t both[] = {0, 1};
  EXPECT_EQ(hausdorff_distance(line, both, both), 0.0);
  EXPECT_EQ(hausdorff_distance(line, zero, both), 3.0);
  EXPECT_EQ(hausdorff_distance(PointCloud::line({0, 1}), PointCloud::line({0})), 1.0);
  EXPECT_THROW(hausdorff_distance(line, std::span<const std::size_t>{}, both), Error);
  EXPECT_THROW(hausdorff_distance(PointCloud(1), PointCloud::line({0})), Error);
}

TEST(Hausdorff, SymmetricAndTriangleOnRandomTriples) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    const auto a = generate_cloud(1 + rng.uniform_int(0, 9), dim, Cube{-1, 1}, rng);
    const auto b = generate_cloud(1 + rng.uniform_int(0, 9), dim, Cube{-1, 1}, rng);
    const auto c = generate_cloud(1 + rng.uniform_int(0, 9), dim, Cube{-1, 1}, rng);
    const double ab = hausdorff_distance(a, b);
    EXPECT_EQ(ab, hausdorff_distance(b, a));
    EXPECT_LE(hausdorff_distance(a, c), ab + hausdorff_distance(b, c) + 1e-9);
    EXPECT_GT(ab, 0.0);
    EXPECT_EQ(hausdorff_distance(a, a), 0.0);
  }
}

TEST(Hausdorff, ZeroOnlyForEqualSets) {
  // Same set listed in another order with a repeat.
  const auto a = PointCloud::line({1, 2, 3});
  const auto b = PointCloud::line({3, 1, 2, 2});
  EXPECT_EQ(hausdorff_distance(a, b), 0.0);
  EXPECT_GT(hausdorff_distance(a, PointCloud::line({1, 2})), 0.0);
}

TEST(GenerateCloud, EmptyContainedAndDeterministic) {
  Rng r0(1);
  EXPECT_TRUE(generate_cloud(0, 3, Cube{0, 100}, r0).empty());
  for (const Region region : {Region{Cube{0, 100}}, Region{UnitBall{}}}) {
    Rng a(9);
    Rng b(9);
    const auto x = generate_cloud(500, 3, region, a);
    const auto y = generate_cloud(500, 3, region, b);
    EXPECT_EQ(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_TRUE(contains(region, x.point(i)));
  }
  Rng bad(1);
  EXPECT_THROW(generate_cloud(3, 2, Cube{1, 1}, bad), Error);
}

TEST(PerturbCloud, ZeroNoiseCopiesPoints) {
  Rng rng(2);
  const auto black = generate_cloud(30, 3, Cube{0, 100}, rng);
  const auto red = perturb_cloud(black, 0.0, rng);
  for (std::size_t i = 0; i < red.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < black.size() && !found; ++j) {
      found = euclidean(red.point(i), black.point(j)) == 0.0;
    }
    EXPECT_TRUE(found);
  }
  EXPECT_EQ(hausdorff_distance(black, red), 0.0);
}

TEST(PerturbCloud, SizeAndHausdorffBound) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const std::size_t dim = 1 + seed % 5;
    const auto black = generate_cloud(20, dim, Cube{0, 100}, rng);
    const double eps = 0.1 + static_cast<double>(seed % 10);
    const auto red = perturb_cloud(black, eps, rng);
    EXPECT_GE(red.size(), black.size());
    EXPECT_LE(red.size(), 3 * black.size());
    EXPECT_LE(hausdorff_distance(black, red), eps);
  }
  Rng rng(0);
  EXPECT_THROW(perturb_cloud(PointCloud::line({0}), -1.0, rng), Error);
}

TEST(Rotation, OneDimensionalIsIdentity) {
  Rng rng(4);
  const auto r = random_rotation(1, rng);
  EXPECT_EQ(r.a, std::vector<double>{1.0});
}

TEST(Rotation, OrthogonalWithUnitDeterminant) {
  Rng rng(8);
  for (std::size_t dim = 1; dim <= 6; ++dim) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto r = random_rotation(dim, rng);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          double dot = 0.0;
          for (std::size_t k = 0; k < dim; ++k) dot += r(k, i) * r(k, j);
          EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-12);
        }
      }
      EXPECT_NEAR(determinant(r), 1.0, 1e-12);
    }
  }
}

TEST(Rotation, IsometryPreservesDistances) {
  Rng rng(10);
  for (std::size_t dim = 1; dim <= 5; ++dim) {
    const auto cloud = generate_cloud(40, dim, Cube{-10, 10}, rng);
    const auto r = random_rotation(dim, rng);
    std::vector<double> t(dim);
    for (double& x : t) x = rng.uniform(-5, 5);
    const auto moved = apply_isometry(cloud, r, t);
    const auto d0 = distance_matrix(cloud);
    const auto d1 = distance_matrix(moved);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      for (std::size_t j = 0; j < cloud.size(); ++j) {
        EXPECT_NEAR(d1(i, j), d0(i, j), 1e-9 * std::max(1.0, d0(i, j)));
      }
    }
  }
}

}  // namespace
}  // namespace mergegram
