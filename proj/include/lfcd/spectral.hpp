#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "lfcd/graph.hpp"
#include "lfcd/partition.hpp"

namespace lfcd {

// Dense symmetric matrix, row-major.
class DenseSymMatrix {
 public:
  explicit DenseSymMatrix(std::size_t order)
      : order_(order), data_(order * order, 0.0) {}

  std::size_t order() const { return order_; }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * order_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }
  const std::vector<double>& data() const { return data_; }
  bool is_symmetric() const;

 private:
  std::size_t order_;
  std::vector<double> data_;
};

// Points as rows.
struct Embedding {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct EigenPairs {
  std::vector<double> values;  // ascending, k entries
  Embedding vectors;           // n rows, k columns, column c pairs values[c]
};

// Unnormalized Laplacian Deg - A.
DenseSymMatrix laplacian(const Graph& g);

// The k smallest eigenpairs by cyclic Jacobi rotations. Eigenvectors are
// orthonormal and each residual max-norm |A v - lambda v| stays within
// 1e-8 * max(1, |A|_inf); throws NumericError if that cannot be reached.
EigenPairs eigen_smallest_k(const DenseSymMatrix& m, std::size_t k);

// Lloyd iterations with k-means++ seeding, 10 restarts, at most 100
// iterations each, convergence when no centroid moves by 1e-9. Returns
// cluster ids renumbered by first appearance. Deterministic in (points,
// k, seed).
std::vector<std::uint32_t> kmeans(const Embedding& points, std::uint32_t k,
                                  std::uint64_t seed);

// RatioCut pipeline: Laplacian, k smallest eigenvectors as rows, k-means.
Partition spectral_cluster(const Graph& g, std::uint32_t k,
                           std::uint64_t seed);

}  // namespace lfcd
