//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/analysis/clustering.hpp"

#include <cmath>
#include <limits>

#include "molguide/chem/similarity.hpp"
#include "molguide/common/error.hpp"
#include "molguide/common/parallel.hpp"
#include "molguide/common/rng.hpp"

namespace molguide {
namespace {
struct Centroid {
  std::vector<double> values;
  double norm2 = 0.0;

  void refresh() {
    norm2 = 0.0;
    for (double v: values)
      norm2 += v * v;
  }
};

double distance(const std::vector<std::size_t> &bits, const Centroid &c) {
  double dot = 0.0;
  for (std::size_t b: bits)
    dot += c.values[b];
  const double denom = static_cast<double>(bits.size()) + c.norm2 - dot;
  return denom == 0.0 ? 0.0 : 1.0 - dot / denom;
}

Centroid from_point(const std::vector<std::size_t> &bits, std::size_t width) {
  Centroid c { std::vector<double>(width, 0.0), 0.0 };
  for (std::size_t b: bits)
    c.values[b] = 1.0;
  c.refresh();
  return c;
}

/// Nearest centroid, lowest index on ties.
std::pair<int, double> nearest(const std::vector<std::size_t> &bits,
                               const std::vector<Centroid> &centroids) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    const double d = distance(bits, centroids[c]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  return { best, best_d };
}
} // namespace

double generalized_tanimoto_distance(std::span<const double> x,
                                     std::span<const double> c) {
  if (x.size() != c.size())
    throw UsageError("distance between vectors of different widths");
  double dot = 0.0, xx = 0.0, cc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x[i] * c[i];
    xx += x[i] * x[i];
    cc += c[i] * c[i];
  }
  const double denom = xx + cc - dot;
  return denom == 0.0 ? 0.0 : 1.0 - dot / denom;
}

std::vector<std::size_t> ClusterModel::cluster_sizes() const {
  std::vector<std::size_t> sizes(k, 0);
  for (int a: assignments)
    ++sizes[static_cast<std::size_t>(a)];
  return sizes;
}

ClusterModel kmeans_fingerprints(std::span<const Fingerprint> fps,
                                 std::size_t k, std::uint64_t seed,
                                 std::size_t max_iterations,
                                 std::size_t workers) {
  if (k == 0 || fps.size() < k)
    throw UsageError("k-means needs 1 <= k <= number of fingerprints (k="
                     + std::to_string(k) + ", points="
                     + std::to_string(fps.size()) + ")");
  const std::size_t width = fps[0].width(), n = fps.size();
  std::vector<std::vector<std::size_t>> points;
  points.reserve(n);
  for (const Fingerprint &fp: fps) {
    if (fp.width() != width || fp.radius() != fps[0].radius())
      throw UsageError("k-means input mixes fingerprint widths or radii");
    points.push_back(fp.set_bits());
  }

  Rng rng(seed);
  std::vector<Centroid> centroids;
  std::vector<bool> chosen(n, false);
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  std::size_t first = rng.below(n);
  for (;;) {
    chosen[first] = true;
    centroids.push_back(from_point(points[first], width));
    if (centroids.size() == k)
      break;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = distance(points[i], centroids.back());
      d2[i] = std::min(d2[i], d * d);
      if (!chosen[i])
        total += d2[i];
    }
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (!chosen[i])
        w[i] = total > 0.0 ? d2[i] : 1.0;
    first = rng.categorical(w);
  }

  ClusterModel model;
  model.k = k;
  model.width = width;
  model.seed = seed;
  model.assignments.assign(n, -1);
  std::vector<double> dist(n, 0.0);
  auto assign = [&] {
    std::vector<int> next(n);
    parallel_for(n, [&](std::size_t i) {
      auto [c, d] = nearest(points[i], centroids);
      next[i] = c;
      dist[i] = d;
    }, workers);
    const bool changed = next != model.assignments;
    model.assignments = std::move(next);
    double obj = 0.0;
    for (double d: dist)
      obj += d;
    return std::pair(changed, obj);
  };

  auto [changed, objective] = assign();
  model.objective.push_back(objective);
  while (model.iterations < max_iterations) {
    ++model.iterations;
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n; ++i)
        if (model.assignments[i] == static_cast<int>(c))
          members.push_back(i);
      if (members.empty())
        continue;
      Centroid mean { std::vector<double>(width, 0.0), 0.0 };
      for (std::size_t i: members)
        for (std::size_t b: points[i])
          mean.values[b] += 1.0;
      for (double &v: mean.values)
        v /= static_cast<double>(members.size());
      mean.refresh();
      double old_cost = 0.0, new_cost = 0.0;
      for (std::size_t i: members) {
        old_cost += dist[i];
        new_cost += distance(points[i], mean);
      }
      if (new_cost < old_cost)
        centroids[c] = std::move(mean);
    }
    std::tie(changed, objective) = assign();
    model.objective.push_back(objective);
    if (!changed)
      break;
  }
  for (const Centroid &c: centroids)
    model.centroids.push_back(c.values);
  return model;
}

std::vector<int> assign_clusters(const ClusterModel &model,
                                 std::span<const Fingerprint> actives,
                                 std::span<const Fingerprint> candidates,
                                 std::size_t workers) {
  if (actives.empty())
    throw UsageError("cluster assignment needs at least one active");
  if (actives.size() != model.assignments.size())
    throw UsageError("actives do not match the clustered set");
  std::vector<int> out(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t c) {
    std::size_t best = 0;
    double best_sim = -1.0;
    for (std::size_t a = 0; a < actives.size(); ++a) {
      const double s = tanimoto(actives[a], candidates[c]);
      if (s > best_sim) {
        best_sim = s;
        best = a;
      }
    }
    out[c] = model.assignments[best];
  }, workers);
  return out;
}

} // namespace molguide
