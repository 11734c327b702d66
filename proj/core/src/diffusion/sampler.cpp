//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/diffusion/sampler.hpp"

#include <algorithm>

#include "molguide/common/error.hpp"
#include "molguide/common/parallel.hpp"

namespace molguide {
namespace {
int draw(Rng &rng, std::span<const double> weights) {
  return static_cast<int>(rng.categorical(weights));
}

std::span<const double> row(std::span<const double> matrix, std::size_t k,
                            int r) {
  return matrix.subspan(static_cast<std::size_t>(r) * k, k);
}

void check_prediction(const ElementDistributions &pred, std::size_t n,
                      const StateSpace &space) {
  if (pred.n != n || pred.atom_classes != space.atom_classes
      || pred.edge_classes != space.edge_classes
      || pred.node.size() != n * space.atom_classes
      || pred.edge.size() != n * n * space.edge_classes)
    throw UsageError("denoiser output shape does not match the state space");
}
} // namespace

OneHotGraph noise_graph(const TransitionModel &model, const OneHotGraph &g0,
                        int t, Rng &rng) {
  if (t < 1 || t > model.schedule.T)
    throw UsageError("noise_graph: t must lie in [1, T]");
  const std::size_t n = g0.size();
  const auto qn = model.nodes.q_bar(t);
  const auto qe = model.edges.q_bar(t);
  const std::size_t a = model.nodes.classes(), b = model.edges.classes();
  OneHotGraph out(n);
  for (std::size_t i = 0; i < n; ++i)
    out.set_node(i, draw(rng, row(qn, a, g0.node(i))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.set_edge(i, j, draw(rng, row(qe, b, g0.edge(i, j))));
  return out;
}

OneHotGraph sample_prior(const TransitionModel &model, std::size_t n,
                         Rng &rng) {
  OneHotGraph out(n);
  const auto mn = model.nodes.marginal();
  const auto me = model.edges.marginal();
  for (std::size_t i = 0; i < n; ++i)
    out.set_node(i, draw(rng, mn));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.set_edge(i, j, draw(rng, me));
  return out;
}

OneHotGraph sample_reverse(const Denoiser &denoiser,
                           const TransitionModel &model, std::size_t n,
                           Rng &rng, const StepHook *hook) {
  const StateSpace space = model.space();
  const int T = model.schedule.T;
  OneHotGraph g = sample_prior(model, n, rng);

  for (int t = T; t >= 1; --t) {
    ElementDistributions pred = denoiser.predict(g, t, T);
    check_prediction(pred, n, space);

    ElementDistributions step;
    if (t == 1) {
      step = std::move(pred);
    } else {
      step = ElementDistributions(n, space.atom_classes, space.edge_classes);
      for (std::size_t i = 0; i < n; ++i) {
        auto d = model.nodes.denoising_distribution(pred.node_row(i),
                                                    g.node(i), t);
        std::copy(d.begin(), d.end(), step.node_row(i).begin());
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          auto d = model.edges.denoising_distribution(pred.edge_row(i, j),
                                                      g.edge(i, j), t);
          std::copy(d.begin(), d.end(), step.edge_row(i, j).begin());
        }
    }
    if (hook)
      hook->adjust(g, t, step);

    OneHotGraph next(n);
    for (std::size_t i = 0; i < n; ++i)
      next.set_node(i, draw(rng, step.node_row(i)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        next.set_edge(i, j, draw(rng, step.edge_row(i, j)));
    g = std::move(next);
  }
  return g;
}

MolecularGraph sample_unconditional(const Denoiser &denoiser,
                                    const TransitionModel &model,
                                    std::size_t n, Rng &rng) {
  return sample_reverse(denoiser, model, n, rng).to_molecule();
}

NodeCountDistribution::NodeCountDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  double total = 0.0;
  for (double w: weights_) {
    if (!(w >= 0.0))
      throw UsageError("node-count weights must be nonnegative");
    total += w;
  }
  if (!weights_.empty() && weights_[0] != 0.0)
    throw UsageError("node-count histogram has mass at zero nodes");
  if (!(total > 0.0))
    throw UsageError("node-count histogram is empty");
}

std::size_t NodeCountDistribution::sample(Rng &rng) const {
  return rng.categorical(weights_);
}

std::vector<OneHotGraph> sample_batch(const Denoiser &denoiser,
                                      const TransitionModel &model,
                                      const NodeCountDistribution &sizes,
                                      std::size_t count, std::uint64_t seed,
                                      const StepHook *hook,
                                      std::size_t workers) {
  std::vector<OneHotGraph> out(count);
  parallel_for(
      count,
      [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        const std::size_t n = sizes.sample(rng);
        out[i] = sample_reverse(denoiser, model, n, rng, hook);
      },
      workers);
  return out;
}

} // namespace molguide
