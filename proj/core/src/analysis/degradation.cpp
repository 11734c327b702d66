//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/analysis/degradation.hpp"

#include <algorithm>
#include <cstdio>

#include "molguide/chem/similarity.hpp"
#include "molguide/common/error.hpp"
#include "molguide/molgraph/simple_graph.hpp"

namespace molguide {
namespace {
/// Edge-id sets of every simple cycle with 5 or 6 vertices. Each cycle is
/// rooted at its smallest vertex and walked toward its smaller neighbor.
std::vector<std::vector<long>> cycles_56(const SimpleGraph &g) {
  std::vector<std::vector<long>> out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(g.size(), false);
  auto extend = [&](auto &&self, std::size_t root) -> void {
    const std::size_t v = path.back();
    for (std::size_t w: g.neighbors(v)) {
      if (w == root && path.size() >= 5 && path[1] < path.back()) {
        std::vector<long> edges;
        for (std::size_t i = 0; i < path.size(); ++i)
          edges.push_back(g.edge_id(path[i], path[(i + 1) % path.size()]));
        std::sort(edges.begin(), edges.end());
        out.push_back(std::move(edges));
      }
      if (w <= root || on_path[w] || path.size() == 6)
        continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, root);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (std::size_t root = 0; root < g.size(); ++root) {
    path = { root };
    on_path[root] = true;
    extend(extend, root);
    on_path[root] = false;
  }
  return out;
}

bool share_edge(const std::vector<long> &a, const std::vector<long> &b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j])
      return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

std::vector<Fingerprint> all_fingerprints(std::span<const MolecularGraph> mols,
                                          int radius, std::size_t width) {
  std::vector<Fingerprint> out;
  out.reserve(mols.size());
  for (const MolecularGraph &g: mols)
    out.push_back(morgan_fingerprint(g, radius, width));
  return out;
}
} // namespace

bool has_fused_ring_56(const MolecularGraph &g) {
  const auto cycles = cycles_56(SimpleGraph::from_molecule(g));
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = a + 1; b < cycles.size(); ++b)
      if (share_edge(cycles[a], cycles[b]))
        return true;
  return false;
}

double structure_proportion(std::span<const MolecularGraph> molecules) {
  if (molecules.empty())
    throw UsageError("structure proportion of an empty set");
  const auto hits = std::count_if(molecules.begin(), molecules.end(),
                                  [](const MolecularGraph &g) {
    return has_fused_ring_56(g);
  });
  return static_cast<double>(hits) / static_cast<double>(molecules.size());
}

ActiveReference build_active_reference(std::span<const MolecularGraph> actives,
                                       std::size_t k, std::uint64_t seed,
                                       std::size_t workers,
                                       FingerprintParams screening,
                                       FingerprintParams clustering) {
  ActiveReference ref;
  ref.screening_params = screening;
  ref.clustering_params = clustering;
  ref.screening = all_fingerprints(actives, screening.radius, screening.width);
  ref.clustering = all_fingerprints(actives, clustering.radius, clustering.width);
  ref.model = kmeans_fingerprints(ref.clustering, k, seed, kMaxKMeansIterations,
                                  workers);
  return ref;
}

DegradationReport cluster_table(std::span<const NamedSource> sources,
                                const ActiveReference &actives,
                                std::size_t workers) {
  DegradationReport report;
  report.k = actives.model.k;
  for (const NamedSource &src: sources) {
    SourceRow row;
    row.name = src.name;
    row.molecules = src.molecules.size();
    row.cluster_counts.assign(report.k, 0);
    if (!src.molecules.empty()) {
      row.fused_ring_proportion = structure_proportion(src.molecules);
      auto screening = all_fingerprints(src.molecules,
                                        actives.screening_params.radius,
                                        actives.screening_params.width);
      auto best = best_similarities(actives.screening, screening, workers);
      std::vector<MolecularGraph> passing;
      for (std::size_t i = 0; i < best.size(); ++i)
        if (best[i] > kDrugLikeThreshold)
          passing.push_back(src.molecules[i]);
      row.drug_like = passing.size();
      auto clustering = all_fingerprints(passing,
                                         actives.clustering_params.radius,
                                         actives.clustering_params.width);
      for (int c: assign_clusters(actives.model, actives.clustering, clustering,
                                  workers))
        ++row.cluster_counts[static_cast<std::size_t>(c)];
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_cluster_csv(std::ostream &os, const DegradationReport &report) {
  os << "cluster";
  for (const SourceRow &r: report.rows)
    os << ',' << r.name;
  os << '\n';
  for (std::size_t c = 0; c < report.k; ++c) {
    os << c;
    for (const SourceRow &r: report.rows)
      os << ',' << r.cluster_counts[c];
    os << '\n';
  }
}

void write_proportion_csv(std::ostream &os, const DegradationReport &report) {
  os << "source,proportion\n";
  char buf[32];
  for (const SourceRow &r: report.rows) {
    os << r.name << ',';
    if (r.fused_ring_proportion) {
      std::snprintf(buf, sizeof buf, "%.6f", *r.fused_ring_proportion);
      os << buf;
    } else {
      os << "NA";
    }
    os << '\n';
  }
}

void write_summary(std::ostream &os, const DegradationReport &report) {
  os << "clusters: " << report.k << '\n';
  char buf[64];
  for (const SourceRow &r: report.rows) {
    const std::size_t occupied = static_cast<std::size_t>(std::count_if(
        r.cluster_counts.begin(), r.cluster_counts.end(),
        [](std::size_t c) { return c > 0; }));
    os << r.name << ": molecules=" << r.molecules
       << " drug_like=" << r.drug_like << " occupied_clusters=" << occupied;
    if (r.fused_ring_proportion) {
      std::snprintf(buf, sizeof buf, " fused_56=%.6f", *r.fused_ring_proportion);
      os << buf;
    }
    os << '\n';
  }
}

} // namespace molguide
