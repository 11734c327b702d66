//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/neural/training.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "molguide/common/error.hpp"
#include "molguide/molgraph/simple_graph.hpp"

namespace molguide {

GraphInputs make_inputs(const OneHotGraph &g, const StateSpace &space, int t,
                        int T, bool requires_grad) {
  g.validate(space);
  const std::size_t n = g.size();
  GraphInputs in;
  in.x = ag::leaf(Tensor({ n, space.atom_classes },
                         g.node_one_hot(space.atom_classes)),
                  requires_grad);
  in.e = ag::leaf(Tensor({ n, n, space.edge_classes },
                         g.edge_one_hot(space.edge_classes)),
                  requires_grad);
  in.aux = cycle_spectral_features(SimpleGraph::from_edge_classes(n, g.edges()),
                                   t, T);
  return in;
}

ag::Var diffusion_loss(const DenoiserOutput &pred, const OneHotGraph &g0,
                       double lambda_edge) {
  const std::size_t n = g0.size();
  const Shape &ns = pred.node_logits.shape();
  const Shape &es = pred.edge_logits.shape();
  if (ns.size() != 2 || ns[0] != n || es.size() != 3 || es[0] != n
      || es[1] != n)
    throw UsageError("prediction shape does not match the target graph");

  std::vector<int> node_targets(g0.nodes().begin(), g0.nodes().end());
  std::vector<double> node_weights(n, 1.0);
  ag::Var loss = ag::cross_entropy_rows(pred.node_logits, node_targets,
                                        node_weights);
  if (lambda_edge == 0.0 || n < 2)
    return loss;

  std::vector<int> edge_targets(g0.edges().begin(), g0.edges().end());
  std::vector<double> edge_weights(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edge_weights[i * n + j] = 1.0;
  ag::Var flat = ag::reshape(pred.edge_logits, { n * n, es[2] });
  ag::Var edge = ag::cross_entropy_rows(flat, edge_targets, edge_weights);
  return ag::add(loss, ag::scale(edge, lambda_edge));
}

void TrainConfig::validate() const {
  if (steps == 0 || batch_size == 0)
    throw UsageError("training steps and batch size must be positive");
  if (!(lambda_edge >= 0.0) || !std::isfinite(lambda_edge))
    throw UsageError("lambda_edge must be a finite non-negative number");
  if (!(adam.learning_rate > 0.0))
    throw UsageError("learning rate must be positive");
}

std::vector<double> train_diffusion(GraphTransformer &model,
                                    const TransitionModel &transitions,
                                    std::span<const OneHotGraph> dataset,
                                    const TrainConfig &config,
                                    std::uint64_t seed,
                                    const StepCallback &on_step) {
  config.validate();
  if (dataset.empty())
    throw UsageError("training dataset is empty");
  if (model.head() != ModelHead::kDenoiser)
    throw UsageError("train_diffusion needs a denoiser head");
  const StateSpace space = model.space();
  if (transitions.space() != space)
    throw UsageError("transition model and network use different state spaces");
  for (const OneHotGraph &g: dataset)
    g.validate(space);

  const int T = transitions.schedule.T;
  Rng rng(seed);
  Adam opt(model.params(), config.adam);
  model.params().zero_grad();
  std::vector<double> trace;
  trace.reserve(config.steps);
  for (std::size_t step = 1; step <= config.steps; ++step) {
    double total = 0.0;
    for (std::size_t b = 0; b < config.batch_size; ++b) {
      const OneHotGraph &g0 = dataset[rng.below(dataset.size())];
      const int t = static_cast<int>(rng.between(1, T));
      OneHotGraph g_t = noise_graph(transitions, g0, t, rng);
      GraphInputs in = make_inputs(g_t, space, t, T);
      ag::Var loss = diffusion_loss(model.denoise(in.x, in.e, in.aux), g0,
                                    config.lambda_edge);
      const double value = loss.value().item();
      if (!std::isfinite(value))
        throw NumericError("training diverged at step " + std::to_string(step)
                           + ": loss is " + std::to_string(value));
      ag::backward(loss);
      total += value;
    }
    opt.step(1.0 / static_cast<double>(config.batch_size));
    const double mean = total / static_cast<double>(config.batch_size);
    trace.push_back(mean);
    if (on_step)
      on_step(step, mean);
  }
  return trace;
}

void softmax_rows(std::span<const double> logits, std::size_t c,
                  std::span<double> out) {
  for (std::size_t r = 0; r * c < logits.size(); ++r) {
    const double *z = logits.data() + r * c;
    double *p = out.data() + r * c;
    const double mx = *std::max_element(z, z + c);
    double s = 0.0;
    for (std::size_t k = 0; k < c; ++k)
      s += p[k] = std::exp(z[k] - mx);
    for (std::size_t k = 0; k < c; ++k)
      p[k] /= s;
  }
}

ElementDistributions NeuralDenoiser::predict(const OneHotGraph &g_t, int t,
                                             int T) const {
  const StateSpace space = model_.space();
  ag::NoGradGuard guard;
  GraphInputs in = make_inputs(g_t, space, t, T);
  DenoiserOutput out = model_.denoise(in.x, in.e, in.aux);
  if (!out.node_logits.value().all_finite()
      || !out.edge_logits.value().all_finite())
    throw NumericError("denoiser produced non-finite logits at t="
                       + std::to_string(t));
  ElementDistributions d(g_t.size(), space.atom_classes, space.edge_classes);
  softmax_rows(out.node_logits.value().data, space.atom_classes, d.node);
  softmax_rows(out.edge_logits.value().data, space.edge_classes, d.edge);
  return d;
}

} // namespace molguide
