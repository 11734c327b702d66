//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_FEATURES_HPP_
#define MOLGUIDE_MOLGRAPH_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "molguide/molgraph/molecular_graph.hpp"
#include "molguide/molgraph/simple_graph.hpp"

namespace molguide {

/// Simple cycles of length 3, 4, 5, 6.
using CycleCounts = std::array<double, 4>;

struct CycleStatistics {
  /// Per node: cycles of each length passing through the node.
  std::vector<CycleCounts> per_node;
  CycleCounts totals{};
};

/// Lengths 3 and 4 from closed walks (adjacency-power diagonals), lengths 5
/// and 6 by explicit enumeration.
CycleStatistics count_cycles(const SimpleGraph &g);

/// Structural and time inputs to the denoiser and classifier.
struct AuxFeatures {
  static constexpr std::size_t kEigenvalueCount = 5;
  /// Per-node width: four cycle counts and the Fiedler weight.
  static constexpr std::size_t kNodeWidth = 5;
  /// Global width: time, four cycle totals, component count, eigenvalues.
  static constexpr std::size_t kGlobalWidth = 1 + 4 + 1 + kEigenvalueCount;

  std::size_t n = 0;
  std::vector<CycleCounts> node_cycle_counts;
  CycleCounts graph_cycle_totals{};
  double components = 1.0;
  /// Smallest nonzero Laplacian eigenvalues, ascending, zero padded.
  std::array<double, kEigenvalueCount> eigenvalues{};
  /// Diagonal of the projector onto the eigenspace of the smallest nonzero
  /// Laplacian eigenvalue: the squared Fiedler vector entries, summed over a
  /// degenerate eigenspace. Zero when the graph has no edges.
  std::vector<double> fiedler_weight;
  /// t / T.
  double time_fraction = 0.0;

  /// n * kNodeWidth row-major.
  std::vector<double> node_matrix() const;
  std::vector<double> global_vector() const;
};

/// Laplacian eigenvalues count as zero below this bound.
inline constexpr double kZeroEigenvalue = 1e-8;

AuxFeatures cycle_spectral_features(const SimpleGraph &g, int t, int T);
AuxFeatures cycle_spectral_features(const MolecularGraph &g, int t, int T);

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_FEATURES_HPP_
