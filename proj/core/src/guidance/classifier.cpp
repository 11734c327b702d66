//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/guidance/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "molguide/common/error.hpp"
#include "molguide/diffusion/sampler.hpp"

namespace molguide {

std::vector<LabeledGraph> upsample_balance(std::span<const LabeledGraph> data,
                                           Rng &rng) {
  std::vector<std::size_t> by_label[2];
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int y = data[i].label;
    if (y != 0 && y != 1)
      throw DataError("label " + std::to_string(y) + " is not binary");
    by_label[y].push_back(i);
  }
  if (by_label[0].empty() || by_label[1].empty())
    throw UsageError("upsampling needs both positive and negative examples");

  const int minority = by_label[1].size() <= by_label[0].size() ? 1 : 0;
  const auto &small = by_label[minority];
  const std::size_t target = by_label[1 - minority].size();

  std::vector<std::size_t> picks(by_label[1 - minority]);
  const double ratio = static_cast<double>(small.size()) / static_cast<double>(target);
  if (ratio >= 0.9) {
    picks.insert(picks.end(), small.begin(), small.end());
  } else {
    const std::size_t copies = target / small.size();
    for (std::size_t c = 0; c < copies; ++c)
      picks.insert(picks.end(), small.begin(), small.end());
    std::vector<std::size_t> pool(small);
    rng.shuffle(pool.begin(), pool.end());
    picks.insert(picks.end(), pool.begin(),
                 pool.begin() + static_cast<std::ptrdiff_t>(target - copies * small.size()));
  }
  rng.shuffle(picks.begin(), picks.end());

  std::vector<LabeledGraph> out;
  out.reserve(picks.size());
  for (std::size_t i: picks)
    out.push_back(data[i]);
  return out;
}

std::string_view classifier_loss_name(ClassifierLoss loss) noexcept {
  return loss == ClassifierLoss::kBce ? "bce" : "mse";
}

ClassifierLoss parse_classifier_loss(std::string_view name) {
  if (name == "bce")
    return ClassifierLoss::kBce;
  if (name == "mse")
    return ClassifierLoss::kMse;
  throw UsageError("unknown classifier loss '" + std::string(name)
                   + "' (expected bce or mse)");
}

ag::Var classifier_loss(const ag::Var &logit, int label, ClassifierLoss loss) {
  const double y = static_cast<double>(label);
  return loss == ClassifierLoss::kBce ? ag::bce_with_logit(logit, y)
                                      : ag::mse_on_sigmoid(logit, y);
}

void ClassifierTrainConfig::validate() const {
  if (steps == 0 || batch_size == 0)
    throw UsageError("training steps and batch size must be positive");
  if (!(adam.learning_rate > 0.0))
    throw UsageError("learning rate must be positive");
}

std::vector<double> train_classifier(GraphTransformer &model,
                                     const TransitionModel &transitions,
                                     std::span<const LabeledGraph> dataset,
                                     const ClassifierTrainConfig &config,
                                     std::uint64_t seed,
                                     const StepCallback &on_step) {
  config.validate();
  if (dataset.empty())
    throw UsageError("classifier dataset is empty");
  if (model.head() != ModelHead::kClassifier)
    throw UsageError("train_classifier needs a classifier head");
  const StateSpace space = model.space();
  if (transitions.space() != space)
    throw UsageError("transition model and network use different state spaces");
  for (const LabeledGraph &item: dataset) {
    item.graph.validate(space);
    if (item.label != 0 && item.label != 1)
      throw DataError("label " + std::to_string(item.label) + " is not binary");
  }

  const int T = transitions.schedule.T;
  Rng rng(seed);
  Adam opt(model.params(), config.adam);
  model.params().zero_grad();
  std::vector<double> trace;
  trace.reserve(config.steps);
  for (std::size_t step = 1; step <= config.steps; ++step) {
    double total = 0.0;
    for (std::size_t b = 0; b < config.batch_size; ++b) {
      const LabeledGraph &item = dataset[rng.below(dataset.size())];
      const int t = static_cast<int>(rng.between(1, T));
      GraphInputs in = make_inputs(noise_graph(transitions, item.graph, t, rng),
                                   space, t, T);
      ag::Var loss = classifier_loss(model.classify(in.x, in.e, in.aux),
                                     item.label, config.loss);
      const double value = loss.value().item();
      if (!std::isfinite(value))
        throw NumericError("classifier training diverged at step "
                           + std::to_string(step));
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

double classifier_probability(const GraphTransformer &model,
                              const OneHotGraph &g_t, int t, int T) {
  ag::NoGradGuard guard;
  GraphInputs in = make_inputs(g_t, model.space(), t, T);
  const double z = model.classify(in.x, in.e, in.aux).value().item();
  return 1.0 / (1.0 + std::exp(-z));
}

double roc_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size())
    throw UsageError("roc_auc needs one label per score");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t { 0 });
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  // Sum of positive ranks with ties sharing their mean rank.
  double rank_sum = 0.0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]])
      ++j;
    const double mean_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k)
      if (labels[order[k]] == 1) {
        rank_sum += mean_rank;
        ++pos;
      }
    i = j;
  }
  const std::size_t neg = scores.size() - pos;
  if (pos == 0 || neg == 0)
    throw UsageError("roc_auc needs both positive and negative labels");
  const double p = static_cast<double>(pos);
  return (rank_sum - p * (p + 1) / 2) / (p * static_cast<double>(neg));
}

std::vector<StratumMetrics> evaluate_by_timestep(
    const GraphTransformer &model, const TransitionModel &transitions,
    std::span<const LabeledGraph> heldout, std::span<const int> timesteps,
    std::uint64_t seed) {
  const int T = transitions.schedule.T;
  std::vector<StratumMetrics> out;
  std::vector<int> labels;
  for (const LabeledGraph &item: heldout)
    labels.push_back(item.label);
  for (std::size_t s = 0; s < timesteps.size(); ++s) {
    const int t = timesteps[s];
    if (t < 1 || t > T)
      throw UsageError("timestep " + std::to_string(t) + " outside [1, T]");
    Rng rng = Rng::stream(seed, s);
    std::vector<double> scores;
    std::size_t correct = 0;
    for (const LabeledGraph &item: heldout) {
      const double p = classifier_probability(
          model, noise_graph(transitions, item.graph, t, rng), t, T);
      scores.push_back(p);
      correct += (p >= 0.5 ? 1 : 0) == item.label;
    }
    out.push_back({ t, roc_auc(scores, labels),
                    static_cast<double>(correct) / static_cast<double>(heldout.size()) });
  }
  return out;
}

} // namespace molguide
