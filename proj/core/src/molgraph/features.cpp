//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/molgraph/features.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <stdexcept>

#include "molguide/molgraph/symmetric_eigen.hpp"

namespace molguide {
namespace {
using Words = std::vector<std::uint64_t>;

// Bitset over vertices strictly greater than v.
Words above(std::size_t v, std::size_t words) {
  Words out(words, ~std::uint64_t { 0 });
  for (std::size_t w = 0; w < words && w * 64 <= v; ++w)
    out[w] = v - w * 64 >= 63 ? 0 : ~std::uint64_t { 0 } << (v - w * 64 + 1);
  return out;
}

void enumerate_long_cycles(const SimpleGraph &g, CycleStatistics &stats) {
  const std::size_t n = g.size(), words = (n + 63) / 64;
  std::vector<Words> adj(n, Words(words, 0));
  for (auto [i, j]: g.edges()) {
    adj[i][j / 64] |= std::uint64_t { 1 } << (j % 64);
    adj[j][i / 64] |= std::uint64_t { 1 } << (i % 64);
  }
  std::vector<Words> greater(n);
  for (std::size_t v = 0; v < n; ++v)
    greater[v] = above(v, words);

  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  Words path_bits(words, 0), closing(words, 0);

  // Cycles are rooted at their smallest vertex and closed by a vertex above
  // path[1], which counts each cycle in one orientation. The closing vertex
  // is found by intersecting neighbor sets.
  auto close = [&](std::size_t root, std::size_t u) {
    double count = 0.0;
    for (std::size_t w = 0; w < words; ++w) {
      closing[w] = adj[u][w] & adj[root][w] & greater[root][w] & greater[path[1]][w]
                   & ~path_bits[w];
      count += std::popcount(closing[w]);
    }
    if (count == 0.0)
      return;
    const std::size_t len = path.size() + 1;
    for (std::size_t v: path)
      stats.per_node[v][len - 3] += count;
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t bits = closing[w]; bits; bits &= bits - 1)
        stats.per_node[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))][len - 3]
            += 1.0;
    stats.totals[len - 3] += count;
  };

  auto dfs = [&](auto &&self, std::size_t root, std::size_t u) -> void {
    if (path.size() >= 4)
      close(root, u);
    if (path.size() >= 5)
      return;
    for (std::size_t v: g.neighbors(u)) {
      if (v <= root || on_path[v])
        continue;
      on_path[v] = true;
      path_bits[v / 64] |= std::uint64_t { 1 } << (v % 64);
      path.push_back(v);
      self(self, root, v);
      path.pop_back();
      path_bits[v / 64] &= ~(std::uint64_t { 1 } << (v % 64));
      on_path[v] = false;
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    path_bits[s / 64] |= std::uint64_t { 1 } << (s % 64);
    dfs(dfs, s, s);
    path_bits[s / 64] &= ~(std::uint64_t { 1 } << (s % 64));
    on_path[s] = false;
  }
}
} // namespace

CycleStatistics count_cycles(const SimpleGraph &g) {
  const std::size_t n = g.size();
  CycleStatistics stats;
  stats.per_node.assign(n, CycleCounts {});

  std::vector<long> a(n * n, 0), a2(n * n, 0);
  for (auto [i, j]: g.edges())
    a[i * n + j] = a[j * n + i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k: g.neighbors(i))
      for (std::size_t j = 0; j < n; ++j)
        a2[i * n + j] += a[k * n + j];

  for (std::size_t i = 0; i < n; ++i) {
    long closed3 = 0, closed4 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      closed3 += a2[i * n + j] * a[j * n + i];
      closed4 += a2[i * n + j] * a2[j * n + i];
    }
    const long d = static_cast<long>(g.neighbors(i).size());
    long backtrack = d * d;
    for (std::size_t j: g.neighbors(i))
      backtrack += static_cast<long>(g.neighbors(j).size()) - 1;
    stats.per_node[i][0] = static_cast<double>(closed3 / 2);
    stats.per_node[i][1] = static_cast<double>((closed4 - backtrack) / 2);
  }
  for (std::size_t i = 0; i < n; ++i) {
    stats.totals[0] += stats.per_node[i][0];
    stats.totals[1] += stats.per_node[i][1];
  }
  stats.totals[0] /= 3.0;
  stats.totals[1] /= 4.0;

  enumerate_long_cycles(g, stats);
  return stats;
}

std::vector<double> AuxFeatures::node_matrix() const {
  std::vector<double> out(n * kNodeWidth);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < 4; ++k)
      out[i * kNodeWidth + k] = node_cycle_counts[i][k];
    out[i * kNodeWidth + 4] = fiedler_weight[i];
  }
  return out;
}

std::vector<double> AuxFeatures::global_vector() const {
  std::vector<double> out;
  out.reserve(kGlobalWidth);
  out.push_back(time_fraction);
  out.insert(out.end(), graph_cycle_totals.begin(), graph_cycle_totals.end());
  out.push_back(components);
  out.insert(out.end(), eigenvalues.begin(), eigenvalues.end());
  return out;
}

AuxFeatures cycle_spectral_features(const SimpleGraph &g, int t, int T) {
  if (T <= 0 || t < 0 || t > T)
    throw std::invalid_argument("cycle_spectral_features: bad time step");
  const std::size_t n = g.size();
  AuxFeatures f;
  f.n = n;
  f.time_fraction = static_cast<double>(t) / static_cast<double>(T);

  CycleStatistics cycles = count_cycles(g);
  f.node_cycle_counts = std::move(cycles.per_node);
  f.graph_cycle_totals = cycles.totals;

  const std::size_t components = g.component_count();
  f.components = static_cast<double>(components);
  f.fiedler_weight.assign(n, 0.0);

  std::vector<double> laplacian(n * n, 0.0);
  for (auto [i, j]: g.edges()) {
    laplacian[i * n + j] = laplacian[j * n + i] = -1.0;
    laplacian[i * n + i] += 1.0;
    laplacian[j * n + j] += 1.0;
  }
  SymmetricEigen eig = symmetric_eigen(laplacian, n);

  // The first `components` eigenvalues are the zero eigenvalues.
  for (std::size_t k = 0; k < AuxFeatures::kEigenvalueCount; ++k) {
    const std::size_t idx = components + k;
    f.eigenvalues[k] = idx < n ? std::max(0.0, eig.values[idx]) : 0.0;
  }
  if (components < n) {
    const double lambda = eig.values[components];
    const double tol = 1e-8 * std::max(1.0, lambda);
    for (std::size_t k = components;
         k < n && std::abs(eig.values[k] - lambda) <= tol; ++k) {
      auto vec = eig.vector(k);
      for (std::size_t i = 0; i < n; ++i)
        f.fiedler_weight[i] += vec[i] * vec[i];
    }
  }
  return f;
}

AuxFeatures cycle_spectral_features(const MolecularGraph &g, int t, int T) {
  return cycle_spectral_features(SimpleGraph::from_molecule(g), t, T);
}

} // namespace molguide
