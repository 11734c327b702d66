//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_ANALYSIS_CLUSTERING_HPP_
#define MOLGUIDE_ANALYSIS_CLUSTERING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "molguide/chem/fingerprint.hpp"

namespace molguide {

inline constexpr std::size_t kDefaultClusterCount = 30;
inline constexpr std::size_t kMaxKMeansIterations = 100;

/// 1 - <x, c> / (|x|^2 + |c|^2 - <x, c>), and 0 when both are zero.
double generalized_tanimoto_distance(std::span<const double> x,
                                     std::span<const double> c);

struct ClusterModel {
  std::size_t k = 0;
  std::size_t width = 0;
  /// k rows of width reals.
  std::vector<std::vector<double>> centroids;
  /// Cluster of each clustered fingerprint.
  std::vector<int> assignments;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  /// Sum of point-to-centroid distances after seeding and after each
  /// iteration; non-increasing.
  std::vector<double> objective;

  std::vector<std::size_t> cluster_sizes() const;
};

/// k-means under the generalized Tanimoto distance with k-means++ seeding.
/// A cluster's centroid moves to its member mean only when that does not
/// raise the cluster's summed distance; empty clusters keep their centroid.
/// Stops at an assignment fixed point or after max_iterations. Throws
/// UsageError when k is 0 or exceeds the number of fingerprints.
ClusterModel kmeans_fingerprints(std::span<const Fingerprint> fps,
                                 std::size_t k = kDefaultClusterCount,
                                 std::uint64_t seed = 0,
                                 std::size_t max_iterations = kMaxKMeansIterations,
                                 std::size_t workers = 1);

/// Cluster of each candidate's most Tanimoto-similar active, the lowest
/// active index winning ties. actives must be the fingerprints the model
/// was fit on.
std::vector<int> assign_clusters(const ClusterModel &model,
                                 std::span<const Fingerprint> actives,
                                 std::span<const Fingerprint> candidates,
                                 std::size_t workers = 1);

} // namespace molguide

#endif // MOLGUIDE_ANALYSIS_CLUSTERING_HPP_
