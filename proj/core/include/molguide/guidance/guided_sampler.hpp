//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_GUIDANCE_GUIDED_SAMPLER_HPP_
#define MOLGUIDE_GUIDANCE_GUIDED_SAMPLER_HPP_

#include <cstddef>
#include <vector>

#include "molguide/diffusion/sampler.hpp"
#include "molguide/guidance/classifier.hpp"

namespace molguide {

inline constexpr double kDefaultGuidanceScale = 1000.0;

struct GuidanceConfig {
  double lambda = kDefaultGuidanceScale;
  /// +1 or -1, multiplies the exponent.
  int sign = 1;
  int target_label = 1;

  void validate() const;
  friend bool operator==(const GuidanceConfig &, const GuidanceConfig &) = default;
};

/// Gradient over the relaxed one-hot channels, laid out like
/// ElementDistributions.
struct GraphGradient {
  std::size_t n = 0;
  std::vector<double> node;
  std::vector<double> edge;
};

/// -d loss(g(G^t), y_c) / dG for the classifier's training loss, with the
/// edge block symmetrized by averaging (i, j) and (j, i).
GraphGradient classifier_log_grad(const GraphTransformer &classifier,
                                  ClassifierLoss loss, const OneHotGraph &g_t,
                                  int t, int T, int target_label);

/// p'(s) proportional to p(s) * exp(sign * lambda * grad(s)) per element.
/// Returns base unchanged when lambda is 0.
ElementDistributions guided_reweight(const ElementDistributions &base,
                                     const GraphGradient &grad,
                                     const GuidanceConfig &config);

/// Reweights every reverse step by the classifier gradient at (G^t, t).
class ClassifierGuidance: public StepHook {
public:
  ClassifierGuidance(const GraphTransformer &classifier, ClassifierLoss loss,
                     int T, GuidanceConfig config);

  void adjust(const OneHotGraph &g_t, int t,
              ElementDistributions &dist) const override;

  const GuidanceConfig &config() const noexcept { return cfg_; }

private:
  const GraphTransformer &classifier_;
  ClassifierLoss loss_;
  int T_;
  GuidanceConfig cfg_;
};

OneHotGraph sample_guided(const Denoiser &denoiser,
                          const TransitionModel &transitions,
                          const ClassifierGuidance &guidance, std::size_t n,
                          Rng &rng);

} // namespace molguide

#endif // MOLGUIDE_GUIDANCE_GUIDED_SAMPLER_HPP_
