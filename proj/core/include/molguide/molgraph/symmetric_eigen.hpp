//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_SYMMETRIC_EIGEN_HPP_
#define MOLGUIDE_MOLGRAPH_SYMMETRIC_EIGEN_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace molguide {

struct SymmetricEigen {
  std::size_t n = 0;
  /// Ascending.
  std::vector<double> values;
  /// vectors[k * n + i] is component i of the eigenvector for values[k];
  /// unit norm.
  std::vector<double> vectors;

  std::span<const double> vector(std::size_t k) const {
    return std::span<const double>(vectors).subspan(k * n, n);
  }
};

/// Cyclic Jacobi rotations on a dense symmetric row-major matrix, iterated
/// until the off-diagonal Frobenius norm falls below tol.
SymmetricEigen symmetric_eigen(std::span<const double> matrix, std::size_t n,
                               double tol = 1e-13);

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_SYMMETRIC_EIGEN_HPP_
