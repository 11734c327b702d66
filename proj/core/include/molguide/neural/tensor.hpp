//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_NEURAL_TENSOR_HPP_
#define MOLGUIDE_NEURAL_TENSOR_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace molguide {

using Shape = std::vector<std::size_t>;

std::size_t numel(const Shape &shape) noexcept;
std::string shape_string(const Shape &shape);

/// Dense row-major array of doubles.
struct Tensor {
  Shape shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(Shape s, double fill = 0.0)
      : shape(std::move(s)), data(numel(shape), fill) { }
  /// Throws std::invalid_argument if data does not match the shape.
  Tensor(Shape s, std::vector<double> values);

  static Tensor scalar(double v) { return Tensor({}, std::vector<double> { v }); }

  std::size_t size() const noexcept { return data.size(); }
  std::size_t rank() const noexcept { return shape.size(); }
  std::size_t dim(std::size_t k) const { return shape.at(k); }
  /// Product of all but the last dimension.
  std::size_t rows() const noexcept;
  /// Last dimension, or 1 for a scalar.
  std::size_t cols() const noexcept;

  double &operator[](std::size_t i) { return data[i]; }
  double operator[](std::size_t i) const { return data[i]; }
  double item() const;

  bool all_finite() const noexcept;

  friend bool operator==(const Tensor &, const Tensor &) = default;
};

} // namespace molguide

#endif // MOLGUIDE_NEURAL_TENSOR_HPP_
