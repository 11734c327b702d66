//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_GUIDANCE_CLASSIFIER_HPP_
#define MOLGUIDE_GUIDANCE_CLASSIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "molguide/common/rng.hpp"
#include "molguide/diffusion/state.hpp"
#include "molguide/diffusion/transitions.hpp"
#include "molguide/neural/graph_transformer.hpp"
#include "molguide/neural/training.hpp"

namespace molguide {

struct LabeledGraph {
  OneHotGraph graph;
  /// 0 or 1.
  int label = 0;
};

/// Replicates the minority class so both classes end up equally large:
/// whole copies first, then a remainder drawn without replacement. Inputs
/// already within 10% of balance are only shuffled. Throws UsageError
/// unless both labels occur, DataError on a label outside {0, 1}.
std::vector<LabeledGraph> upsample_balance(std::span<const LabeledGraph> data,
                                           Rng &rng);

enum class ClassifierLoss {
  kBce,
  kMse,
};

std::string_view classifier_loss_name(ClassifierLoss loss) noexcept;
/// Accepts "bce" and "mse"; throws UsageError otherwise.
ClassifierLoss parse_classifier_loss(std::string_view name);

/// BCE on the logit, or squared error of sigmoid(logit) against the label.
ag::Var classifier_loss(const ag::Var &logit, int label, ClassifierLoss loss);

struct ClassifierTrainConfig {
  std::size_t steps = 2000;
  std::size_t batch_size = 8;
  ClassifierLoss loss = ClassifierLoss::kBce;
  AdamConfig adam;

  void validate() const;
};

/// Per step: draw items and t uniformly, noise, forward and minimize the
/// configured loss. Returns the per-step mean loss; NumericError on a
/// non-finite loss.
std::vector<double> train_classifier(GraphTransformer &model,
                                     const TransitionModel &transitions,
                                     std::span<const LabeledGraph> dataset,
                                     const ClassifierTrainConfig &config,
                                     std::uint64_t seed,
                                     const StepCallback &on_step = {});

/// sigmoid(classifier logit) for the noisy graph g_t at step t.
double classifier_probability(const GraphTransformer &model,
                              const OneHotGraph &g_t, int t, int T);

/// Mann-Whitney estimate; tied scores count one half. Throws UsageError
/// unless both labels are present.
double roc_auc(std::span<const double> scores, std::span<const int> labels);

struct StratumMetrics {
  int t = 0;
  double auc = 0.0;
  double accuracy = 0.0;
};

/// Held-out AUC and accuracy at threshold 0.5 after noising every item to
/// each listed t.
std::vector<StratumMetrics> evaluate_by_timestep(
    const GraphTransformer &model, const TransitionModel &transitions,
    std::span<const LabeledGraph> heldout, std::span<const int> timesteps,
    std::uint64_t seed);

} // namespace molguide

#endif // MOLGUIDE_GUIDANCE_CLASSIFIER_HPP_
