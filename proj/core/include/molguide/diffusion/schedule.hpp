//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_DIFFUSION_SCHEDULE_HPP_
#define MOLGUIDE_DIFFUSION_SCHEDULE_HPP_

#include <vector>

namespace molguide {

inline constexpr int kDefaultSteps = 500;
inline constexpr double kCosineOffset = 0.008;

/// alpha[t] and alpha_bar[t] for t = 0..T with alpha[0] = alpha_bar[0] = 1.
struct NoiseSchedule {
  int T = 0;
  std::vector<double> alpha;
  std::vector<double> alpha_bar;

  /// alpha_bar(t) = f(t) / f(0), f(t) = cos^2((t/T + s) / (1 + s) * pi/2).
  static NoiseSchedule cosine(int T, double s = kCosineOffset);
  /// From per-step retention alpha[1..T]; alpha_bar is their running product.
  static NoiseSchedule from_alphas(std::vector<double> step_alphas);

  friend bool operator==(const NoiseSchedule &,
                         const NoiseSchedule &) = default;
};

} // namespace molguide

#endif // MOLGUIDE_DIFFUSION_SCHEDULE_HPP_
