//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/neural/params.hpp"

#include <cmath>

#include "molguide/common/error.hpp"

namespace molguide {

ag::Var ParameterStore::add(const std::string &name, Tensor init) {
  if (index_.count(name))
    throw UsageError("duplicate parameter name: " + name);
  index_.emplace(name, entries_.size());
  entries_.emplace_back(name, ag::leaf(std::move(init), true));
  return entries_.back().second;
}

const ag::Var &ParameterStore::get(const std::string &name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw UsageError("unknown parameter: " + name);
  return entries_[it->second].second;
}

std::size_t ParameterStore::scalar_count() const noexcept {
  std::size_t n = 0;
  for (const auto &[name, v]: entries_)
    n += v.value().size();
  return n;
}

void ParameterStore::zero_grad() {
  for (auto &[name, v]: entries_)
    v.zero_grad();
}

void ParameterStore::load(
    const std::vector<std::pair<std::string, Tensor>> &tensors) {
  if (tensors.size() != entries_.size())
    throw DataError("parameter count mismatch: expected "
                    + std::to_string(entries_.size()) + ", got "
                    + std::to_string(tensors.size()));
  for (const auto &[name, t]: tensors) {
    auto it = index_.find(name);
    if (it == index_.end())
      throw DataError("unexpected parameter: " + name);
    ag::Node *node = entries_[it->second].second.node();
    if (node->value.shape != t.shape)
      throw DataError("shape mismatch for parameter " + name + ": "
                      + shape_string(node->value.shape) + " vs "
                      + shape_string(t.shape));
    node->value.data = t.data;
  }
}

std::vector<std::pair<std::string, Tensor>> ParameterStore::snapshot() const {
  std::vector<std::pair<std::string, Tensor>> out;
  out.reserve(entries_.size());
  for (const auto &[name, v]: entries_)
    out.emplace_back(name, v.value());
  return out;
}

Tensor glorot_uniform(std::size_t fan_in, std::size_t fan_out, Rng &rng) {
  const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  Tensor t({ fan_in, fan_out });
  for (double &x: t.data)
    x = bound * (2.0 * rng.uniform() - 1.0);
  return t;
}

Adam::Adam(ParameterStore &store, AdamConfig config)
    : store_(store), cfg_(config) {
  for (const auto &[name, v]: store_.entries()) {
    m_.emplace_back(v.value().size(), 0.0);
    v_.emplace_back(v.value().size(), 0.0);
  }
}

void Adam::step(double grad_scale) {
  ++t_;
  const double c1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  std::size_t k = 0;
  for (const auto &[name, var]: store_.entries()) {
    ag::Node *node = var.node();
    const Tensor &g = node->grad_buffer();
    auto &m = m_[k], &v = v_[k];
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double gi = g.data[i] * grad_scale;
      m[i] = cfg_.beta1 * m[i] + (1.0 - cfg_.beta1) * gi;
      v[i] = cfg_.beta2 * v[i] + (1.0 - cfg_.beta2) * gi * gi;
      node->value.data[i] -= cfg_.learning_rate * (m[i] / c1)
                             / (std::sqrt(v[i] / c2) + cfg_.epsilon);
    }
    ++k;
  }
  store_.zero_grad();
}

} // namespace molguide
