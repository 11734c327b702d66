//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_DIFFUSION_TRANSITIONS_HPP_
#define MOLGUIDE_DIFFUSION_TRANSITIONS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "molguide/diffusion/schedule.hpp"
#include "molguide/diffusion/state.hpp"
#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

struct Marginals {
  std::vector<double> node;
  std::vector<double> edge;

  friend bool operator==(const Marginals &, const Marginals &) = default;
};

/// Node frequencies over real atoms; edge frequencies over all unordered
/// pairs of the n_max-node padded representation, absent pairs counted as
/// class 0. n_max = 0 uses the largest graph. Throws DataError on an empty
/// dataset or a graph larger than n_max.
Marginals estimate_marginals(std::span<const OneHotGraph> dataset,
                             const StateSpace &space, std::size_t n_max = 0);
Marginals estimate_marginals(std::span<const MolecularGraph> dataset,
                             std::size_t n_max = 0);

/// Marginal transition chain for one class family:
/// Q^t = alpha^t I + (1 - alpha^t) 1 m^T and Qbar^t = Qbar^{t-1} Q^t.
class CategoricalChain {
public:
  CategoricalChain() = default;
  CategoricalChain(const NoiseSchedule &schedule, std::vector<double> marginal);

  std::size_t classes() const noexcept { return k_; }
  int steps() const noexcept { return T_; }
  std::span<const double> marginal() const noexcept { return m_; }

  /// k * k row-major; row = from-class. Valid for t in [1, T].
  std::span<const double> q(int t) const;
  /// Valid for t in [0, T]; Qbar^0 = I.
  std::span<const double> q_bar(int t) const;

  /// q(x^{t-1} | x^t, x^0) for one-hot inputs given as class indices.
  /// Valid for 2 <= t <= T. Throws NumericError on a zero normalizer.
  std::vector<double> posterior_term(int x_t, int x0, int t) const;
  /// Writes the unnormalized product into out; returns its sum.
  double posterior_unnormalized(int x_t, int x0, int t,
                                std::span<double> out) const;

  /// sum_x posterior_term(x_t, x, t) * pred[x]. Hypotheses with a zero
  /// normalizer (x^t unreachable from x) are dropped and the remaining
  /// weights renormalized. Throws UsageError if pred is not normalized within
  /// 1e-6; NumericError if no hypothesis remains.
  std::vector<double> denoising_distribution(std::span<const double> pred,
                                             int x_t, int t) const;

private:
  std::size_t k_ = 0;
  int T_ = 0;
  std::vector<double> m_;
  std::vector<std::vector<double>> q_;
  std::vector<std::vector<double>> q_bar_;
};

struct TransitionModel {
  NoiseSchedule schedule;
  Marginals marginals;
  CategoricalChain nodes;
  CategoricalChain edges;

  StateSpace space() const noexcept {
    return { nodes.classes(), edges.classes() };
  }
};

/// Throws UsageError if a marginal is not a probability vector.
TransitionModel build_transitions(const NoiseSchedule &schedule,
                                  const Marginals &marginals);

} // namespace molguide

#endif // MOLGUIDE_DIFFUSION_TRANSITIONS_HPP_
