//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/diffusion/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "molguide/common/error.hpp"

namespace molguide {
namespace {
void normalize(std::vector<double> &v) {
  double s = 0.0;
  for (double x: v)
    s += x;
  for (double &x: v)
    x /= s;
}

void check_probability(std::span<const double> p, const char *what) {
  double s = 0.0;
  for (double x: p) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw UsageError(std::string(what) + " has a negative or non-finite entry");
    s += x;
  }
  if (p.empty() || std::abs(s - 1.0) > 1e-9)
    throw UsageError(std::string(what) + " does not sum to 1");
}
} // namespace

Marginals estimate_marginals(std::span<const OneHotGraph> dataset,
                             const StateSpace &space, std::size_t n_max) {
  if (dataset.empty())
    throw DataError("cannot estimate marginals of an empty dataset");
  std::size_t largest = 0;
  for (const auto &g: dataset)
    largest = std::max(largest, g.size());
  if (n_max == 0)
    n_max = largest;
  else if (largest > n_max)
    throw DataError("graph with " + std::to_string(largest)
                    + " nodes exceeds n_max = " + std::to_string(n_max));

  Marginals m { std::vector<double>(space.atom_classes, 0.0),
                std::vector<double>(space.edge_classes, 0.0) };
  for (const auto &g: dataset) {
    g.validate(space);
    const std::size_t n = g.size();
    for (int c: g.nodes())
      m.node[static_cast<std::size_t>(c)] += 1.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        m.edge[static_cast<std::size_t>(g.edge(i, j))] += 1.0;
    const std::size_t pairs = n_max * (n_max - 1) / 2;
    m.edge[0] += static_cast<double>(pairs - n * (n - 1) / 2);
  }
  if (n_max < 2)
    m.edge[0] = 1.0;
  normalize(m.node);
  normalize(m.edge);
  return m;
}

Marginals estimate_marginals(std::span<const MolecularGraph> dataset,
                             std::size_t n_max) {
  std::vector<OneHotGraph> graphs;
  graphs.reserve(dataset.size());
  for (const auto &g: dataset)
    graphs.push_back(OneHotGraph::from_molecule(g));
  return estimate_marginals(graphs, StateSpace::molecules(), n_max);
}

CategoricalChain::CategoricalChain(const NoiseSchedule &schedule,
                                   std::vector<double> marginal)
    : k_(marginal.size()), T_(schedule.T), m_(std::move(marginal)) {
  check_probability(m_, "marginal");
  const std::size_t k = k_;
  std::vector<double> identity(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    identity[i * k + i] = 1.0;

  q_.assign(static_cast<std::size_t>(T_) + 1, identity);
  q_bar_.assign(static_cast<std::size_t>(T_) + 1, identity);
  for (int t = 1; t <= T_; ++t) {
    const double a = schedule.alpha[static_cast<std::size_t>(t)];
    auto &q = q_[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        q[i * k + j] = (i == j ? a : 0.0) + (1.0 - a) * m_[j];

    const auto &prev = q_bar_[static_cast<std::size_t>(t) - 1];
    auto &cur = q_bar_[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < k; ++l)
          s += prev[i * k + l] * q[l * k + j];
        cur[i * k + j] = s;
      }
  }
}

std::span<const double> CategoricalChain::q(int t) const {
  if (t < 1 || t > T_)
    throw UsageError("transition step out of range");
  return q_[static_cast<std::size_t>(t)];
}

std::span<const double> CategoricalChain::q_bar(int t) const {
  if (t < 0 || t > T_)
    throw UsageError("cumulative transition step out of range");
  return q_bar_[static_cast<std::size_t>(t)];
}

double CategoricalChain::posterior_unnormalized(int x_t, int x0, int t,
                                                std::span<double> out) const {
  const auto q = this->q(t);
  const auto qb = q_bar(t - 1);
  const std::size_t k = k_;
  const auto xt = static_cast<std::size_t>(x_t);
  const auto xz = static_cast<std::size_t>(x0);
  double s = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    out[j] = q[j * k + xt] * qb[xz * k + j];
    s += out[j];
  }
  return s;
}

std::vector<double> CategoricalChain::posterior_term(int x_t, int x0,
                                                     int t) const {
  if (t < 2 || t > T_)
    throw UsageError("posterior_term requires 2 <= t <= T");
  std::vector<double> out(k_);
  const double z = posterior_unnormalized(x_t, x0, t, out);
  if (!(z > 0.0))
    throw NumericError("posterior has a zero normalizer");
  for (double &x: out)
    x /= z;
  return out;
}

std::vector<double> CategoricalChain::denoising_distribution(
    std::span<const double> pred, int x_t, int t) const {
  if (pred.size() != k_)
    throw UsageError("prediction width does not match class count");
  double total = 0.0;
  for (double p: pred)
    total += p;
  if (std::abs(total - 1.0) > 1e-6)
    throw UsageError("prediction is not normalized");
  if (t < 2 || t > T_)
    throw UsageError("denoising_distribution requires 2 <= t <= T");

  std::vector<double> out(k_, 0.0), term(k_);
  double used = 0.0;
  for (std::size_t x = 0; x < k_; ++x) {
    if (pred[x] == 0.0)
      continue;
    const double z = posterior_unnormalized(x_t, static_cast<int>(x), t, term);
    if (!(z > 0.0))
      continue;
    for (std::size_t j = 0; j < k_; ++j)
      out[j] += pred[x] * (term[j] / z);
    used += pred[x];
  }
  if (!(used > 0.0))
    throw NumericError("no clean-state hypothesis can reach the noisy state");
  for (double &x: out)
    x /= used;
  return out;
}

TransitionModel build_transitions(const NoiseSchedule &schedule,
                                  const Marginals &marginals) {
  TransitionModel model;
  model.schedule = schedule;
  model.marginals = marginals;
  model.nodes = CategoricalChain(schedule, marginals.node);
  model.edges = CategoricalChain(schedule, marginals.edge);
  return model;
}

} // namespace molguide
