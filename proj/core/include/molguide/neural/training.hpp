//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_NEURAL_TRAINING_HPP_
#define MOLGUIDE_NEURAL_TRAINING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "molguide/diffusion/sampler.hpp"
#include "molguide/diffusion/transitions.hpp"
#include "molguide/neural/graph_transformer.hpp"

namespace molguide {

inline constexpr double kDefaultEdgeLossWeight = 5.0;

/// Network inputs for a noisy graph: one-hot leaves plus auxiliary features.
struct GraphInputs {
  ag::Var x;
  ag::Var e;
  AuxFeatures aux;
};

GraphInputs make_inputs(const OneHotGraph &g, const StateSpace &space, int t,
                        int T, bool requires_grad = false);

/// Node cross-entropy plus lambda_edge times the edge cross-entropy over the
/// strict upper triangle.
ag::Var diffusion_loss(const DenoiserOutput &pred, const OneHotGraph &g0,
                       double lambda_edge = kDefaultEdgeLossWeight);

struct TrainConfig {
  std::size_t steps = 2000;
  std::size_t batch_size = 8;
  double lambda_edge = kDefaultEdgeLossWeight;
  AdamConfig adam;

  void validate() const;
  friend bool operator==(const TrainConfig &, const TrainConfig &) = default;
};

/// Called after every optimizer step with the 1-based step and its mean loss.
using StepCallback = std::function<void(std::size_t step, double loss)>;

/// Returns the per-step mean minibatch loss. Throws NumericError on a
/// non-finite loss.
std::vector<double> train_diffusion(GraphTransformer &model,
                                    const TransitionModel &transitions,
                                    std::span<const OneHotGraph> dataset,
                                    const TrainConfig &config,
                                    std::uint64_t seed,
                                    const StepCallback &on_step = {});

class NeuralDenoiser: public Denoiser {
public:
  explicit NeuralDenoiser(const GraphTransformer &model): model_(model) { }

  ElementDistributions predict(const OneHotGraph &g_t, int t,
                               int T) const override;

private:
  const GraphTransformer &model_;
};

/// Row-wise softmax of logits with c columns into out.
void softmax_rows(std::span<const double> logits, std::size_t c,
                  std::span<double> out);

} // namespace molguide

#endif // MOLGUIDE_NEURAL_TRAINING_HPP_
