//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/diffusion/schedule.hpp"

#include <cmath>
#include <numbers>

#include "molguide/common/error.hpp"

namespace molguide {

NoiseSchedule NoiseSchedule::cosine(int T, double s) {
  if (T < 1)
    throw UsageError("noise schedule needs at least one step");
  auto f = [&](int t) {
    const double c = std::cos((static_cast<double>(t) / T + s) / (1.0 + s)
                              * std::numbers::pi / 2.0);
    return c * c;
  };
  NoiseSchedule sch;
  sch.T = T;
  sch.alpha.assign(T + 1, 1.0);
  sch.alpha_bar.assign(T + 1, 1.0);
  const double f0 = f(0);
  for (int t = 1; t <= T; ++t) {
    sch.alpha_bar[t] = f(t) / f0;
    sch.alpha[t] = sch.alpha_bar[t] / sch.alpha_bar[t - 1];
  }
  return sch;
}

NoiseSchedule NoiseSchedule::from_alphas(std::vector<double> step_alphas) {
  if (step_alphas.empty())
    throw UsageError("noise schedule needs at least one step");
  NoiseSchedule sch;
  sch.T = static_cast<int>(step_alphas.size());
  sch.alpha.assign(1, 1.0);
  sch.alpha_bar.assign(1, 1.0);
  for (double a: step_alphas) {
    if (!(a >= 0.0 && a <= 1.0))
      throw UsageError("retention coefficients must lie in [0, 1]");
    sch.alpha.push_back(a);
    sch.alpha_bar.push_back(sch.alpha_bar.back() * a);
  }
  return sch;
}

} // namespace molguide
