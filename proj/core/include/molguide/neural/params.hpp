//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_NEURAL_PARAMS_HPP_
#define MOLGUIDE_NEURAL_PARAMS_HPP_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "molguide/common/rng.hpp"
#include "molguide/neural/autograd.hpp"

namespace molguide {

/// Named trainable tensors in registration order.
class ParameterStore {
public:
  /// Throws UsageError on a duplicate name.
  ag::Var add(const std::string &name, Tensor init);
  const ag::Var &get(const std::string &name) const;
  bool contains(const std::string &name) const {
    return index_.count(name) != 0;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<std::pair<std::string, ag::Var>> &entries() const noexcept {
    return entries_;
  }
  std::size_t scalar_count() const noexcept;

  void zero_grad();
  /// Copies values in from tensors with matching names and shapes. Throws
  /// DataError on a missing name, extra name, or shape mismatch.
  void load(const std::vector<std::pair<std::string, Tensor>> &tensors);
  std::vector<std::pair<std::string, Tensor>> snapshot() const;

private:
  std::vector<std::pair<std::string, ag::Var>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Uniform(-b, b) with b = sqrt(6 / (fan_in + fan_out)).
Tensor glorot_uniform(std::size_t fan_in, std::size_t fan_out, Rng &rng);

struct AdamConfig {
  double learning_rate = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

class Adam {
public:
  Adam(ParameterStore &store, AdamConfig config = {});

  /// One update using grad * grad_scale, then zeroes the gradients.
  void step(double grad_scale = 1.0);
  long steps() const noexcept { return t_; }
  const AdamConfig &config() const noexcept { return cfg_; }

private:
  ParameterStore &store_;
  AdamConfig cfg_;
  long t_ = 0;
  std::vector<std::vector<double>> m_;
  std::vector<std::vector<double>> v_;
};

} // namespace molguide

#endif // MOLGUIDE_NEURAL_PARAMS_HPP_
