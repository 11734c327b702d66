//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_DIFFUSION_SAMPLER_HPP_
#define MOLGUIDE_DIFFUSION_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "molguide/common/rng.hpp"
#include "molguide/diffusion/state.hpp"
#include "molguide/diffusion/transitions.hpp"

namespace molguide {

/// Per-element class distributions over a graph: n * a node rows and
/// n * n * b edge rows (only i < j rows are meaningful; the sampler mirrors).
struct ElementDistributions {
  std::size_t n = 0;
  std::size_t atom_classes = 0;
  std::size_t edge_classes = 0;
  std::vector<double> node;
  std::vector<double> edge;

  ElementDistributions() = default;
  ElementDistributions(std::size_t n, std::size_t a, std::size_t b)
      : n(n), atom_classes(a), edge_classes(b), node(n * a, 0.0),
        edge(n * n * b, 0.0) { }

  std::span<double> node_row(std::size_t i) {
    return std::span(node).subspan(i * atom_classes, atom_classes);
  }
  std::span<const double> node_row(std::size_t i) const {
    return std::span(node).subspan(i * atom_classes, atom_classes);
  }
  std::span<double> edge_row(std::size_t i, std::size_t j) {
    return std::span(edge).subspan((i * n + j) * edge_classes, edge_classes);
  }
  std::span<const double> edge_row(std::size_t i, std::size_t j) const {
    return std::span(edge).subspan((i * n + j) * edge_classes, edge_classes);
  }
};

/// Predicts p(x^0 | G^t) as normalized per-element distributions.
class Denoiser {
public:
  virtual ~Denoiser() = default;
  virtual ElementDistributions predict(const OneHotGraph &g_t, int t,
                                       int T) const = 0;
};

/// Optional per-step adjustment of the reverse-step distributions. It
/// receives the distributions for G^{t-1} to be sampled from G^t.
class StepHook {
public:
  virtual ~StepHook() = default;
  virtual void adjust(const OneHotGraph &g_t, int t,
                      ElementDistributions &dist) const = 0;
};

/// Samples each node and each upper-triangle edge from its row of Qbar^t.
/// Throws UsageError unless 1 <= t <= T.
OneHotGraph noise_graph(const TransitionModel &model, const OneHotGraph &g0,
                        int t, Rng &rng);

/// iid nodes from the node marginal and upper-triangle edges from the edge
/// marginal, mirrored.
OneHotGraph sample_prior(const TransitionModel &model, std::size_t n,
                         Rng &rng);

/// Reverse chain from a prior draw: for t = T..2 each element is drawn from
/// the denoising distribution; at t = 1 from the prediction itself. Nodes are
/// drawn in index order, then edges (i < j) row-major.
OneHotGraph sample_reverse(const Denoiser &denoiser,
                           const TransitionModel &model, std::size_t n,
                           Rng &rng, const StepHook *hook = nullptr);

/// Decoded molecule from sample_reverse(); validity is not checked.
MolecularGraph sample_unconditional(const Denoiser &denoiser,
                                    const TransitionModel &model,
                                    std::size_t n, Rng &rng);

/// Empirical node-count histogram; weights[n] is the count of n-node graphs.
class NodeCountDistribution {
public:
  NodeCountDistribution() = default;
  explicit NodeCountDistribution(std::vector<double> weights);
  template <class Graphs>
  static NodeCountDistribution from_dataset(const Graphs &graphs) {
    std::vector<double> w;
    for (const auto &g: graphs) {
      if (w.size() <= g.size())
        w.resize(g.size() + 1, 0.0);
      w[g.size()] += 1.0;
    }
    return NodeCountDistribution(std::move(w));
  }

  std::size_t sample(Rng &rng) const;
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t max_nodes() const noexcept {
    return weights_.empty() ? 0 : weights_.size() - 1;
  }

private:
  std::vector<double> weights_;
};

/// count samples; sample i uses Rng::stream(seed, i) for both the node count
/// and the chain, so the output does not depend on the worker count.
std::vector<OneHotGraph> sample_batch(const Denoiser &denoiser,
                                      const TransitionModel &model,
                                      const NodeCountDistribution &sizes,
                                      std::size_t count, std::uint64_t seed,
                                      const StepHook *hook = nullptr,
                                      std::size_t workers = 1);

} // namespace molguide

#endif // MOLGUIDE_DIFFUSION_SAMPLER_HPP_
