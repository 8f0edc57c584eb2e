#include "mergegram/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mergegram/error.hpp"

namespace mergegram {

void PointCloud::require_dim() const {
  if (dim_ == 0) throw Error("point cloud dimension must be positive");
}

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  require_dim();
  if (coords_.size() % dim_ != 0) {
    throw Error("coordinate count " + std::to_string(coords_.size()) +
                " is not a multiple of dimension " + std::to_string(dim_));
  }
  for (double x : coords_) {
    if (!std::isfinite(x)) throw Error("point coordinates must be finite");
  }
}

PointCloud PointCloud::line(std::span<const double> xs) {
  return PointCloud(1, std::vector<double>(xs.begin(), xs.end()));
}

void PointCloud::push_back(std::span<const double> p) {
  if (p.size() != dim_) throw Error("point has wrong dimension");
  for (double x : p) {
    if (!std::isfinite(x)) throw Error("point coordinates must be finite");
  }
  coords_.insert(coords_.end(), p.begin(), p.end());
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), d_(std::move(entries)) {
  if (n_ == 0) throw Error("empty input");
  if (d_.size() != n_ * n_) throw Error("distance matrix must have n*n entries");
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0) {
      throw Error("distance matrix diagonal must be zero (row " + std::to_string(i) + ")");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = (*this)(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw Error("distance matrix entries must be finite and nonnegative (row " +
                    std::to_string(i) + ")");
      }
      if (v != (*this)(j, i)) {
        throw Error("distance matrix is not symmetric (row " +
                    std::to_string(std::max(i, j)) + ")");
      }
    }
  }
}

std::size_t MetricInput::size() const {
  return std::visit([](const auto& v) { return v.size(); }, value_);
}

double MetricInput::distance(std::size_t i, std::size_t j) const {
  if (const auto* c = cloud()) return euclidean(c->point(i), c->point(j));
  return (*matrix())(i, j);
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

DistanceMatrix distance_matrix(const PointCloud& cloud) {
  if (cloud.empty()) throw Error("empty input");
  const std::size_t n = cloud.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = euclidean(cloud.point(i), cloud.point(j));
    }
  }
  return DistanceMatrix(n, std::move(d));
}

namespace {

template <class Dist>
double directed_hausdorff(std::size_t na, std::size_t nb, Dist dist) {
  double worst = 0.0;
  for (std::size_t i = 0; i < na; ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < nb && nearest > worst; ++j) nearest = std::min(nearest, dist(i, j));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const MetricInput& space, std::span<const std::size_t> a,
                          std::span<const std::size_t> b) {
  if (a.empty() || b.empty()) throw Error("Hausdorff distance of an empty subset");
  for (std::size_t i : a) {
    if (i >= space.size()) throw Error("subset index out of range");
  }
  for (std::size_t i : b) {
    if (i >= space.size()) throw Error("subset index out of range");
  }
  const double ab = directed_hausdorff(a.size(), b.size(), [&](std::size_t i, std::size_t j) {
    return space.distance(a[i], b[j]);
  });
  const double ba = directed_hausdorff(b.size(), a.size(), [&](std::size_t i, std::size_t j) {
    return space.distance(b[i], a[j]);
  });
  return std::max(ab, ba);
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
  if (a.empty() || b.empty()) throw Error("Hausdorff distance of an empty subset");
  if (a.dim() != b.dim()) throw Error("clouds have different dimensions");
  const double ab = directed_hausdorff(a.size(), b.size(), [&](std::size_t i, std::size_t j) {
    return euclidean(a.point(i), b.point(j));
  });
  const double ba = directed_hausdorff(b.size(), a.size(), [&](std::size_t i, std::size_t j) {
    return euclidean(b.point(i), a.point(j));
  });
  return std::max(ab, ba);
}

bool contains(const Region& region, std::span<const double> p) {
  if (const auto* cube = std::get_if<Cube>(&region)) {
    return std::all_of(p.begin(), p.end(),
                       [&](double x) { return x >= cube->lo && x <= cube->hi; });
  }
  double sq = 0.0;
  for (double x : p) sq += x * x;
  return sq <= 1.0;
}

PointCloud generate_cloud(std::size_t n, std::size_t dim, const Region& region, Rng& rng) {
  PointCloud cloud(dim);
  std::vector<double> p(dim);
  if (const auto* cube = std::get_if<Cube>(&region)) {
    if (!(cube->lo < cube->hi) || !std::isfinite(cube->lo) || !std::isfinite(cube->hi)) {
      throw Error("invalid cube bounds");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (double& x : p) x = rng.uniform(cube->lo, cube->hi);
      cloud.push_back(p);
    }
    return cloud;
  }
  const std::vector<double> origin(dim, 0.0);
  for (std::size_t i = 0; i < n; ++i) cloud.push_back(sample_ball(origin, 1.0, rng));
  return cloud;
}

std::vector<double> sample_ball(std::span<const double> center, double radius, Rng& rng) {
  const std::size_t dim = center.size();
  std::vector<double> offset(dim);
  // Rejection from the enclosing cube.
  for (;;) {
    double sq = 0.0;
    for (double& x : offset) {
      x = rng.uniform(-1.0, 1.0);
      sq += x * x;
    }
    if (sq <= 1.0) break;
  }
  std::vector<double> p(dim);
  for (std::size_t k = 0; k < dim; ++k) p[k] = center[k] + radius * offset[k];
  return p;
}

PointCloud perturb_cloud(const PointCloud& cloud, double eps, Rng& rng) {
  if (cloud.empty()) throw Error("empty input");
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw Error("noise bound must be finite and >= 0");
  PointCloud red(cloud.dim());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto copies = rng.uniform_int(1, 3);
    for (std::uint64_t c = 0; c < copies; ++c) {
      auto p = sample_ball(cloud.point(i), eps, rng);
      // Rounding in center + eps*offset can push a point just outside the ball.
      if (euclidean(p, cloud.point(i)) > eps) {
        p.assign(cloud.point(i).begin(), cloud.point(i).end());
      }
      red.push_back(p);
    }
  }
  return red;
}

double determinant(const Matrix& m) {
  const std::size_t n = m.dim;
  std::vector<double> a = m.a;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      det = -det;
    }
    det *= a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det;
}

Matrix random_rotation(std::size_t dim, Rng& rng) {
  if (dim == 0) throw Error("rotation dimension must be positive");
  Matrix q{dim, std::vector<double>(dim * dim)};
  for (;;) {
    for (double& x : q.a) x = rng.normal();
    // Modified Gram-Schmidt over columns, run twice for orthogonality to
    // machine precision. Keeping the sign of each Gaussian column (positive
    // diagonal of R) gives the Haar measure.
    bool degenerate = false;
    for (int pass = 0; pass < 2 && !degenerate; ++pass) {
      for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
          double dot = 0.0;
          for (std::size_t r = 0; r < dim; ++r) dot += q(r, c) * q(r, prev);
          for (std::size_t r = 0; r < dim; ++r) q(r, c) -= dot * q(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < dim; ++r) norm += q(r, c) * q(r, c);
        norm = std::sqrt(norm);
        if (norm < 1e-8) {
          degenerate = true;
          break;
        }
        for (std::size_t r = 0; r < dim; ++r) q(r, c) /= norm;
      }
    }
    if (!degenerate) break;
  }
  if (determinant(q) < 0.0) {
    for (std::size_t r = 0; r < dim; ++r) q(r, 0) = -q(r, 0);
  }
  return q;
}

PointCloud apply_isometry(const PointCloud& cloud, const Matrix& rotation,
                          std::span<const double> translation) {
  const std::size_t dim = cloud.dim();
  if (rotation.dim != dim) throw Error("rotation dimension does not match cloud");
  if (!translation.empty() && translation.size() != dim) {
    throw Error("translation dimension does not match cloud");
  }
  PointCloud out(dim);
  std::vector<double> q(dim);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t r = 0; r < dim; ++r) {
      double v = translation.empty() ? 0.0 : translation[r];
      for (std::size_t c = 0; c < dim; ++c) v += rotation(r, c) * p[c];
      q[r] = v;
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace mergegram
