//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/guidance/guided_sampler.hpp"

#include <algorithm>
#include <cmath>

#include "molguide/common/error.hpp"

namespace molguide {
namespace {
void reweight_rows(std::vector<double> &probs, const std::vector<double> &grad,
                   std::size_t classes, double scale) {
  for (std::size_t r = 0; r * classes < probs.size(); ++r) {
    double *p = probs.data() + r * classes;
    const double *g = grad.data() + r * classes;
    double mx = -INFINITY;
    for (std::size_t k = 0; k < classes; ++k)
      if (p[k] > 0.0)
        mx = std::max(mx, scale * g[k]);
    if (mx == -INFINITY)
      continue;
    double total = 0.0;
    for (std::size_t k = 0; k < classes; ++k)
      total += p[k] = p[k] > 0.0 ? p[k] * std::exp(scale * g[k] - mx) : 0.0;
    for (std::size_t k = 0; k < classes; ++k)
      p[k] /= total;
  }
}
} // namespace

void GuidanceConfig::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw UsageError("guidance lambda must be a finite non-negative number");
  if (sign != 1 && sign != -1)
    throw UsageError("guidance sign must be +1 or -1");
  if (target_label != 0 && target_label != 1)
    throw UsageError("guidance target label must be 0 or 1");
}

GraphGradient classifier_log_grad(const GraphTransformer &classifier,
                                  ClassifierLoss loss, const OneHotGraph &g_t,
                                  int t, int T, int target_label) {
  const StateSpace space = classifier.space();
  GraphInputs in = make_inputs(g_t, space, t, T, true);
  const ag::Var leaves[] = { in.x, in.e };
  ag::backward_to(classifier_loss(classifier.classify(in.x, in.e, in.aux),
                                  target_label, loss),
                  leaves);

  const std::size_t n = g_t.size(), b = space.edge_classes;
  GraphGradient out;
  out.n = n;
  out.node = in.x.grad().data;
  for (double &v: out.node)
    v = -v;
  const auto &ge = in.e.grad().data;
  out.edge.assign(ge.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < b; ++k)
        out.edge[(i * n + j) * b + k]
            = -0.5 * (ge[(i * n + j) * b + k] + ge[(j * n + i) * b + k]);
  return out;
}

ElementDistributions guided_reweight(const ElementDistributions &base,
                                     const GraphGradient &grad,
                                     const GuidanceConfig &config) {
  config.validate();
  if (grad.n != base.n || grad.node.size() != base.node.size()
      || grad.edge.size() != base.edge.size())
    throw UsageError("gradient does not match the distribution layout");
  if (config.lambda == 0.0)
    return base;
  ElementDistributions out = base;
  const double scale = config.sign * config.lambda;
  reweight_rows(out.node, grad.node, base.atom_classes, scale);
  reweight_rows(out.edge, grad.edge, base.edge_classes, scale);
  return out;
}

ClassifierGuidance::ClassifierGuidance(const GraphTransformer &classifier,
                                       ClassifierLoss loss, int T,
                                       GuidanceConfig config)
    : classifier_(classifier), loss_(loss), T_(T), cfg_(config) {
  cfg_.validate();
  if (classifier.head() != ModelHead::kClassifier)
    throw UsageError("guidance needs a classifier head");
}

void ClassifierGuidance::adjust(const OneHotGraph &g_t, int t,
                                ElementDistributions &dist) const {
  if (cfg_.lambda == 0.0)
    return;
  GraphGradient grad
      = classifier_log_grad(classifier_, loss_, g_t, t, T_, cfg_.target_label);
  dist = guided_reweight(dist, grad, cfg_);
}

OneHotGraph sample_guided(const Denoiser &denoiser,
                          const TransitionModel &transitions,
                          const ClassifierGuidance &guidance, std::size_t n,
                          Rng &rng) {
  if (guidance.config().lambda == 0.0)
    return sample_reverse(denoiser, transitions, n, rng);
  return sample_reverse(denoiser, transitions, n, rng, &guidance);
}

} // namespace molguide
