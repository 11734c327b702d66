//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_NEURAL_AUTOGRAD_HPP_
#define MOLGUIDE_NEURAL_AUTOGRAD_HPP_

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "molguide/neural/tensor.hpp"

namespace molguide::ag {

struct Node {
  Tensor value;
  Tensor grad;
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node &)> backward_fn;

  /// Zero-filled gradient buffer matching value, created on first use.
  Tensor &grad_buffer();
};

/// Handle to a value in the recorded computation graph.
class Var {
public:
  Var() = default;
  explicit Var(std::shared_ptr<Node> node): node_(std::move(node)) { }

  bool defined() const noexcept { return node_ != nullptr; }
  const Tensor &value() const { return node_->value; }
  const Shape &shape() const { return node_->value.shape; }
  bool requires_grad() const { return node_->requires_grad; }
  /// Accumulated gradient; zero tensor if backward never reached this node.
  const Tensor &grad() const { return node_->grad_buffer(); }
  Node *node() const noexcept { return node_.get(); }
  const std::shared_ptr<Node> &shared() const noexcept { return node_; }

  void zero_grad();

private:
  std::shared_ptr<Node> node_;
};

/// Graph leaf. Gradients accumulate into it across backward() calls.
Var leaf(Tensor value, bool requires_grad);
inline Var constant(Tensor value) { return leaf(std::move(value), false); }

/// Seeds d(root)/d(root) = 1 and propagates to every reachable node that
/// requires gradients. Throws UsageError if root is not a recorded scalar.
void backward(const Var &root);
/// Like backward, but only nodes on a path from one of inputs to root
/// receive gradients; parameters elsewhere in the graph stay untouched.
void backward_to(const Var &root, std::span<const Var> inputs);

/// Disables graph recording on this thread while alive.
class NoGradGuard {
public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard &) = delete;
  NoGradGuard &operator=(const NoGradGuard &) = delete;

private:
  bool previous_;
};

bool grad_enabled() noexcept;

// Elementwise, equal shapes.
Var add(const Var &a, const Var &b);
Var sub(const Var &a, const Var &b);
Var mul(const Var &a, const Var &b);
Var scale(const Var &a, double s);
Var add_scalar(const Var &a, double s);

// Broadcast a rank-1 tensor of length a.cols() over every row of a.
Var add_row(const Var &a, const Var &row);
Var mul_row(const Var &a, const Var &row);

/// x[..., in] * w[in, out] + b[out]; b may be undefined.
Var linear(const Var &x, const Var &w, const Var &b);
/// a[m, k] * b[k, n].
Var matmul(const Var &a, const Var &b);

Var silu(const Var &a);
Var sigmoid(const Var &a);
Var exp(const Var &a);
/// Natural log; inputs must be positive.
Var log(const Var &a);
Var sqrt(const Var &a);
Var square(const Var &a);

/// Normalizes every row over the last dimension, then applies gamma, beta.
Var layer_norm(const Var &x, const Var &gamma, const Var &beta,
               double eps = 1e-5);

/// x[n, n, c] -> softmax over the second index for each (i, c).
Var softmax_dim1(const Var &x);
/// q[n, c], k[n, c] -> out[i, j, c] = q[i, c] * k[j, c].
Var pair_product(const Var &q, const Var &k);
/// a[n, n, c], v[n, c] -> out[i, c] = sum_j a[i, j, c] * v[j, c].
Var attend(const Var &a, const Var &v);
/// x[n, n, c] -> out[i, j, c] = x[j, i, c].
Var transpose01(const Var &x);

/// Mean over all rows: x[..., d] -> [d].
Var mean_rows(const Var &x);
/// Standard deviation over all rows, sqrt(var + eps): x[..., d] -> [d].
Var std_rows(const Var &x, double eps = 1e-6);
/// Concatenation along the last dimension; leading dimensions must match.
Var concat_last(const Var &a, const Var &b);
Var reshape(const Var &a, Shape shape);
/// Sum of every entry, as a scalar.
Var sum(const Var &a);

/// sum_r weight[r] * (logsumexp(logits[r]) - logits[r, target[r]]) over
/// logits[..., c].
Var cross_entropy_rows(const Var &logits, std::span<const int> targets,
                       std::span<const double> weights);
/// -(y log s + (1 - y) log(1 - s)) with s = sigmoid(logit), logit scalar.
Var bce_with_logit(const Var &logit, double y);
/// (sigmoid(logit) - y)^2, logit scalar.
Var mse_on_sigmoid(const Var &logit, double y);

} // namespace molguide::ag

#endif // MOLGUIDE_NEURAL_AUTOGRAD_HPP_
