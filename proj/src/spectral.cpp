#include "lfcd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "lfcd/rng.hpp"

namespace lfcd {

namespace {

constexpr int kJacobiMaxSweeps = 100;
constexpr std::uint32_t kKmeansRestarts = 10;
constexpr std::uint32_t kKmeansMaxIterations = 100;
constexpr double kKmeansMovementTolerance = 1e-9;

double offdiag_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      sum += a[p * n + q] * a[p * n + q];
    }
  }
  return std::sqrt(2.0 * sum);
}

double inf_norm(const std::vector<double>& a, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a[i * n + j]);
    best = std::max(best, row);
  }
  return best;
}

}  // namespace

bool DenseSymMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if (data_[i * order_ + j] != data_[j * order_ + i]) return false;
    }
  }
  return true;
}

DenseSymMatrix laplacian(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw Error("laplacian of an empty graph");
  DenseSymMatrix m(n);
  for (NodeId u = 0; u < n; ++u) {
    m(u, u) = g.degree(u);
    for (NodeId v : g.neighbors(u)) m(u, v) = -1.0;
  }
  return m;
}

EigenPairs eigen_smallest_k(const DenseSymMatrix& m, std::size_t k) {
  const std::size_t n = m.order();
  if (n == 0) throw Error("eigendecomposition of an empty matrix");
  if (k == 0 || k > n) {
    throw Error("requested " + std::to_string(k) +
                " eigenpairs from an order-" + std::to_string(n) + " matrix");
  }
  if (!m.is_symmetric()) throw Error("matrix is not symmetric");

  std::vector<double> a = m.data();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  // Cyclic Jacobi: sweep the upper triangle zeroing a[p][q] with a Givens
  // rotation; the accumulated rotations are the eigenvectors. Convergence
  // is measured by the off-diagonal Frobenius norm against the input scale,
  // well inside the residual bound promised in the header.
  const double scale = std::max(1.0, inf_norm(a, n));
  const double tolerance = 1e-11 * scale;
  double off = offdiag_norm(a, n);
  int sweeps = 0;
  while (off > tolerance) {
    if (sweeps++ == kJacobiMaxSweeps) {
      throw NumericError("eigensolver did not converge in " +
                         std::to_string(kJacobiMaxSweeps) +
                         " sweeps (off-diagonal norm " + std::to_string(off) +
                         ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t =
            theta >= 0.0 ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                         : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[p * n + i] = a[i * n + p];
          a[i * n + q] = s * aip + c * aiq;
          a[q * n + i] = a[i * n + q];
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v[i * n + p];
          const double viq = v[i * n + q];
          v[i * n + p] = c * vip - s * viq;
          v[i * n + q] = s * vip + c * viq;
        }
      }
    }
    off = offdiag_norm(a, n);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&a, n](std::size_t x, std::size_t y) {
    const double dx = a[x * n + x];
    const double dy = a[y * n + y];
    return dx != dy ? dx < dy : x < y;
  });

  EigenPairs out;
  out.values.resize(k);
  out.vectors.rows = n;
  out.vectors.cols = k;
  out.vectors.data.resize(n * k);
  for (std::size_t c = 0; c < k; ++c) {
    out.values[c] = a[order[c] * n + order[c]];
    for (std::size_t r = 0; r < n; ++r) {
      out.vectors.data[r * k + c] = v[r * n + order[c]];
    }
  }
  return out;
}

namespace {

double squared_distance(const Embedding& points, std::size_t row,
                        const std::vector<double>& centers,
                        std::size_t center) {
  const std::size_t d = points.cols;
  double sum = 0.0;
  for (std::size_t c = 0; c < d; ++c) {
    const double diff = points.data[row * d + c] - centers[center * d + c];
    sum += diff * diff;
  }
  return sum;
}

// k-means++: subsequent centers drawn with probability proportional to the
// squared distance from the nearest center chosen so far.
std::vector<double> seed_centers(const Embedding& points, std::uint32_t k,
                                 std::mt19937_64& rng) {
  const std::size_t n = points.rows;
  const std::size_t d = points.cols;
  std::vector<double> centers(static_cast<std::size_t>(k) * d);
  std::size_t first = uniform_below(rng, n);
  std::copy_n(points.data.begin() + static_cast<std::ptrdiff_t>(first * d), d,
              centers.begin());
  std::vector<double> nearest(n);
  for (std::size_t i = 0; i < n; ++i) {
    nearest[i] = squared_distance(points, i, centers, 0);
  }
  for (std::uint32_t c = 1; c < k; ++c) {
    const double total = std::accumulate(nearest.begin(), nearest.end(), 0.0);
    std::size_t pick = n - 1;
    if (total > 0.0) {
      const double r = uniform01(rng) * total;
      double cumulative = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cumulative += nearest[i];
        if (cumulative > r) {
          pick = i;
          break;
        }
      }
    } else {
      pick = uniform_below(rng, n);
    }
    std::copy_n(points.data.begin() + static_cast<std::ptrdiff_t>(pick * d), d,
                centers.begin() + static_cast<std::ptrdiff_t>(c) *
                                      static_cast<std::ptrdiff_t>(d));
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], squared_distance(points, i, centers, c));
    }
  }
  return centers;
}

void assign_nearest(const Embedding& points, const std::vector<double>& centers,
                    std::uint32_t k, std::vector<std::uint32_t>& assignment,
                    std::vector<std::uint32_t>& cluster_size) {
  const std::size_t n = points.rows;
  std::fill(cluster_size.begin(), cluster_size.end(), 0u);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t best = 0;
    double best_distance = squared_distance(points, i, centers, 0);
    for (std::uint32_t c = 1; c < k; ++c) {
      const double distance = squared_distance(points, i, centers, c);
      if (distance < best_distance) {
        best_distance = distance;
        best = c;
      }
    }
    assignment[i] = best;
    ++cluster_size[best];
  }
}

}  // namespace

std::vector<std::uint32_t> kmeans(const Embedding& points, std::uint32_t k,
                                  std::uint64_t seed) {
  const std::size_t n = points.rows;
  const std::size_t d = points.cols;
  if (k == 0) throw Error("kmeans needs at least one cluster");
  if (k > n) {
    throw Error("kmeans with k = " + std::to_string(k) + " but only " +
                std::to_string(n) + " points");
  }
  if (points.data.size() != n * d) throw Error("embedding shape mismatch");

  std::vector<std::uint32_t> best_assignment;
  double best_wcss = std::numeric_limits<double>::infinity();

  std::vector<std::uint32_t> assignment(n);
  std::vector<std::uint32_t> cluster_size(k);
  std::vector<double> next_centers(static_cast<std::size_t>(k) * d);
  for (std::uint32_t restart = 0; restart < kKmeansRestarts; ++restart) {
    std::mt19937_64 rng(derive_seed(seed, restart));
    std::vector<double> centers = seed_centers(points, k, rng);
    for (std::uint32_t iteration = 0; iteration < kKmeansMaxIterations;
         ++iteration) {
      assign_nearest(points, centers, k, assignment, cluster_size);
      // Revive empty clusters with the point farthest from its centroid,
      // taken from a cluster that can spare one.
      for (std::uint32_t c = 0; c < k; ++c) {
        if (cluster_size[c] != 0) continue;
        double farthest = -1.0;
        std::size_t donor = n;
        for (std::size_t i = 0; i < n; ++i) {
          if (cluster_size[assignment[i]] < 2) continue;
          const double distance =
              squared_distance(points, i, centers, assignment[i]);
          if (distance > farthest) {
            farthest = distance;
            donor = i;
          }
        }
        if (donor == n) continue;
        --cluster_size[assignment[donor]];
        assignment[donor] = c;
        cluster_size[c] = 1;
      }
      std::fill(next_centers.begin(), next_centers.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t col = 0; col < d; ++col) {
          next_centers[assignment[i] * d + col] += points.data[i * d + col];
        }
      }
      double movement = 0.0;
      for (std::uint32_t c = 0; c < k; ++c) {
        if (cluster_size[c] == 0) {
          std::copy_n(centers.begin() + static_cast<std::ptrdiff_t>(c) *
                                            static_cast<std::ptrdiff_t>(d),
                      d,
                      next_centers.begin() + static_cast<std::ptrdiff_t>(c) *
                                                 static_cast<std::ptrdiff_t>(d));
          continue;
        }
        double shift = 0.0;
        for (std::size_t col = 0; col < d; ++col) {
          next_centers[c * d + col] /= cluster_size[c];
          const double diff = next_centers[c * d + col] - centers[c * d + col];
          shift += diff * diff;
        }
        movement = std::max(movement, std::sqrt(shift));
      }
      centers.swap(next_centers);
      if (movement < kKmeansMovementTolerance) break;
    }
    assign_nearest(points, centers, k, assignment, cluster_size);
    double wcss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      wcss += squared_distance(points, i, centers, assignment[i]);
    }
    if (wcss < best_wcss) {
      best_wcss = wcss;
      best_assignment = assignment;
    }
  }

  // Renumber by first appearance so the ids are stable regardless of which
  // restart won.
  return canonical_partition(best_assignment).community_of;
}

Partition spectral_cluster(const Graph& g, std::uint32_t k,
                           std::uint64_t seed) {
  const NodeId n = g.node_count();
  if (n == 0) throw Error("cannot cluster an empty graph");
  if (k == 0 || k > n) {
    throw Error("cluster count k = " + std::to_string(k) +
                " outside [1, " + std::to_string(n) + "]");
  }
  const EigenPairs pairs = eigen_smallest_k(laplacian(g), k);
  return canonical_partition(kmeans(pairs.vectors, k, seed));
}

}  // namespace lfcd
