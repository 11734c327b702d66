//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_ANALYSIS_DEGRADATION_HPP_
#define MOLGUIDE_ANALYSIS_DEGRADATION_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "molguide/analysis/clustering.hpp"
#include "molguide/chem/fingerprint.hpp"
#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

/// True iff two distinct simple cycles, each of 5 or 6 atoms, share a bond.
bool has_fused_ring_56(const MolecularGraph &g);

/// Fraction of molecules with a fused 5/6 ring pair. Throws UsageError on
/// an empty set.
double structure_proportion(std::span<const MolecularGraph> molecules);

/// Active molecules with the fingerprints used for screening and for
/// clustering, and the cluster model fit on the clustering fingerprints.
struct ActiveReference {
  std::vector<Fingerprint> screening;
  std::vector<Fingerprint> clustering;
  ClusterModel model;
  FingerprintParams screening_params = kScreeningFingerprint;
  FingerprintParams clustering_params = kClusteringFingerprint;
};

ActiveReference build_active_reference(std::span<const MolecularGraph> actives,
                                       std::size_t k, std::uint64_t seed,
                                       std::size_t workers = 1,
                                       FingerprintParams screening
                                       = kScreeningFingerprint,
                                       FingerprintParams clustering
                                       = kClusteringFingerprint);

struct SourceRow {
  std::string name;
  std::size_t molecules = 0;
  /// Molecules whose best screening similarity to an active exceeds the
  /// DrugLike threshold.
  std::size_t drug_like = 0;
  /// Per cluster counts of the drug-like molecules.
  std::vector<std::size_t> cluster_counts;
  /// Empty for an empty source.
  std::optional<double> fused_ring_proportion;
};

struct DegradationReport {
  std::size_t k = 0;
  std::vector<SourceRow> rows;
};

struct NamedSource {
  std::string name;
  std::vector<MolecularGraph> molecules;
};

DegradationReport cluster_table(std::span<const NamedSource> sources,
                                const ActiveReference &actives,
                                std::size_t workers = 1);

/// cluster,<source names...> with one row per cluster.
void write_cluster_csv(std::ostream &os, const DegradationReport &report);
/// source,proportion; NA for empty sources.
void write_proportion_csv(std::ostream &os, const DegradationReport &report);
void write_summary(std::ostream &os, const DegradationReport &report);

} // namespace molguide

#endif // MOLGUIDE_ANALYSIS_DEGRADATION_HPP_
