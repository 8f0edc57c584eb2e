#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "mergegram/rng.hpp"

namespace mergegram {

/// Finite cloud of points in R^dim, stored row-major.
class PointCloud {
 public:
  explicit PointCloud(std::size_t dim) : dim_(dim) { require_dim(); }

  /// `coords` holds size()*dim values; throws on ragged or non-finite input.
  PointCloud(std::size_t dim, std::vector<double> coords);

  /// Convenience for one-dimensional clouds such as {0, 4, 6, 9, 10}.
  static PointCloud line(std::span<const double> xs);
  static PointCloud line(std::initializer_list<double> xs) {
    return line(std::span<const double>(xs.begin(), xs.size()));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<const double> coords() const { return coords_; }

  void push_back(std::span<const double> p);

  friend bool operator==(const PointCloud&, const PointCloud&) = default;

 private:
  void require_dim() const;

  std::size_t dim_;
  std::vector<double> coords_;
};

/// Explicit finite metric given by a symmetric, zero-diagonal, nonnegative
/// matrix. The triangle inequality is deliberately not checked.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> d_;
};

/// Either a Euclidean cloud or an explicit matrix.
class MetricInput {
 public:
  MetricInput(PointCloud cloud) : value_(std::move(cloud)) {}
  MetricInput(DistanceMatrix matrix) : value_(std::move(matrix)) {}

  std::size_t size() const;
  double distance(std::size_t i, std::size_t j) const;

  const PointCloud* cloud() const { return std::get_if<PointCloud>(&value_); }
  const DistanceMatrix* matrix() const { return std::get_if<DistanceMatrix>(&value_); }

 private:
  std::variant<PointCloud, DistanceMatrix> value_;
};

double euclidean(std::span<const double> a, std::span<const double> b);

DistanceMatrix distance_matrix(const PointCloud& cloud);

/// Hausdorff distance between two index subsets of one metric space.
double hausdorff_distance(const MetricInput& space, std::span<const std::size_t> a,
                          std::span<const std::size_t> b);

/// Hausdorff distance between two Euclidean clouds of equal dimension.
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

struct Cube {
  double lo;
  double hi;
};
struct UnitBall {};
using Region = std::variant<Cube, UnitBall>;

bool contains(const Region& region, std::span<const double> p);

/// n i.i.d. uniform points in `region`; deterministic in `rng`.
PointCloud generate_cloud(std::size_t n, std::size_t dim, const Region& region, Rng& rng);

/// Uniform point in the closed ball of radius `radius` around `center`.
std::vector<double> sample_ball(std::span<const double> center, double radius, Rng& rng);

/// For every point, emit 1, 2 or 3 points drawn uniformly from its eps-ball.
PointCloud perturb_cloud(const PointCloud& cloud, double eps, Rng& rng);

/// Square dim x dim matrix, row-major.
struct Matrix {
  std::size_t dim = 0;
  std::vector<double> a;

  double operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
  double& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
};

double determinant(const Matrix& m);

/// Haar-random rotation: orthonormalised Gaussian matrix with det = +1.
Matrix random_rotation(std::size_t dim, Rng& rng);

/// x -> R x + t for every point.
PointCloud apply_isometry(const PointCloud& cloud, const Matrix& rotation,
                          std::span<const double> translation);

}  // namespace mergegram
