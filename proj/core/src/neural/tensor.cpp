//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/neural/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace molguide {

std::size_t numel(const Shape &shape) noexcept {
  std::size_t n = 1;
  for (std::size_t d: shape)
    n *= d;
  return n;
}

std::string shape_string(const Shape &shape) {
  std::string s = "[";
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (k)
      s += ", ";
    s += std::to_string(shape[k]);
  }
  return s + "]";
}

Tensor::Tensor(Shape s, std::vector<double> values)
    : shape(std::move(s)), data(std::move(values)) {
  if (data.size() != numel(shape))
    throw std::invalid_argument("tensor data does not match shape "
                                + shape_string(shape));
}

std::size_t Tensor::rows() const noexcept {
  return shape.empty() ? 1 : size() / shape.back();
}

std::size_t Tensor::cols() const noexcept {
  return shape.empty() ? 1 : shape.back();
}

double Tensor::item() const {
  if (data.size() != 1)
    throw std::invalid_argument("item() on a tensor with "
                                + std::to_string(data.size()) + " entries");
  return data[0];
}

bool Tensor::all_finite() const noexcept {
  for (double x: data)
    if (!std::isfinite(x))
      return false;
  return true;
}

} // namespace molguide
