//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gradcheck.hpp"

#include <algorithm>
#include <cmath>

#include "molguide/common/rng.hpp"

namespace molguide::testing {
namespace {
double weighted_sum(const Tensor &out, const std::vector<double> &w) {
  double s = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i)
    s += out.data[i] * w[i];
  return s;
}
} // namespace

GradCheckResult check_gradients(
    const std::function<ag::Var(const std::vector<ag::Var> &)> &f,
    const std::vector<Tensor> &inputs, double step, std::size_t max_probes) {
  std::vector<ag::Var> leaves;
  for (const Tensor &t: inputs)
    leaves.push_back(ag::leaf(t, true));
  ag::Var out = f(leaves);

  Rng rng(0x9e37);
  std::vector<double> w(out.value().size());
  for (double &x: w)
    x = rng.uniform() * 2.0 - 1.0;
  ag::Var loss = ag::sum(ag::mul(out, ag::constant(Tensor(out.shape(), w))));
  ag::backward(loss);

  auto evaluate = [&](std::size_t which, std::size_t idx, double delta) {
    ag::NoGradGuard guard;
    std::vector<ag::Var> probe;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      Tensor t = inputs[k];
      if (k == which)
        t.data[idx] += delta;
      probe.push_back(ag::constant(std::move(t)));
    }
    return weighted_sum(f(probe).value(), w);
  };

  GradCheckResult r;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const std::size_t size = inputs[k].size();
    const std::size_t stride = std::max<std::size_t>(1, size / max_probes);
    const Tensor &g = leaves[k].grad();
    for (std::size_t i = 0; i < size; i += stride) {
      const double numeric
          = (evaluate(k, i, step) - evaluate(k, i, -step)) / (2.0 * step);
      const double analytic = g.data[i];
      const double denom = std::max({ std::abs(analytic), std::abs(numeric),
                                      kGradRelFloor });
      const double err = std::abs(analytic - numeric) / denom;
      ++r.checked;
      if (err > r.max_rel_error || std::isnan(err)) {
        r.max_rel_error = std::isnan(err) ? INFINITY : err;
        r.worst = "input " + std::to_string(k) + " index " + std::to_string(i)
                  + ": analytic " + std::to_string(analytic) + " numeric "
                  + std::to_string(numeric);
      }
    }
  }
  return r;
}

Tensor random_tensor(Shape shape, Rng &rng, double lo, double hi) {
  Tensor t(std::move(shape));
  for (double &x: t.data)
    x = lo + (hi - lo) * rng.uniform();
  return t;
}

std::vector<OpCase> op_cases() {
  std::vector<int> targets { 0, 2, 1, 1 };
  std::vector<double> weights { 1.0, 0.5, 0.0, 2.0 };
  return {
    { "add", [](const Inputs &v) { return ag::add(v[0], v[1]); }, { { 2, 3 }, { 2, 3 } } },
    { "sub", [](const Inputs &v) { return ag::sub(v[0], v[1]); }, { { 2, 3 }, { 2, 3 } } },
    { "mul", [](const Inputs &v) { return ag::mul(v[0], v[1]); }, { { 2, 3 }, { 2, 3 } } },
    { "scale", [](const Inputs &v) { return ag::scale(v[0], -1.7); }, { { 4 } } },
    { "add_scalar", [](const Inputs &v) { return ag::add_scalar(v[0], 0.3); }, { { 4 } } },
    { "add_row", [](const Inputs &v) { return ag::add_row(v[0], v[1]); }, { { 2, 2, 3 }, { 3 } } },
    { "mul_row", [](const Inputs &v) { return ag::mul_row(v[0], v[1]); }, { { 2, 2, 3 }, { 3 } } },
    { "linear", [](const Inputs &v) { return ag::linear(v[0], v[1], v[2]); },
      { { 2, 2, 3 }, { 3, 4 }, { 4 } } },
    { "linear_no_bias", [](const Inputs &v) { return ag::linear(v[0], v[1], ag::Var()); },
      { { 3, 3 }, { 3, 2 } } },
    { "matmul", [](const Inputs &v) { return ag::matmul(v[0], v[1]); }, { { 2, 3 }, { 3, 2 } } },
    { "silu", [](const Inputs &v) { return ag::silu(v[0]); }, { { 5 } } },
    { "sigmoid", [](const Inputs &v) { return ag::sigmoid(v[0]); }, { { 5 } } },
    { "exp", [](const Inputs &v) { return ag::exp(v[0]); }, { { 5 } } },
    { "log", [](const Inputs &v) { return ag::log(v[0]); }, { { 5 } }, 0.5, 2.0 },
    { "sqrt", [](const Inputs &v) { return ag::sqrt(v[0]); }, { { 5 } }, 0.5, 2.0 },
    { "square", [](const Inputs &v) { return ag::square(v[0]); }, { { 5 } } },
    { "layer_norm", [](const Inputs &v) { return ag::layer_norm(v[0], v[1], v[2]); },
      { { 3, 4 }, { 4 }, { 4 } } },
    { "softmax_dim1", [](const Inputs &v) { return ag::softmax_dim1(v[0]); }, { { 3, 3, 2 } } },
    { "pair_product", [](const Inputs &v) { return ag::pair_product(v[0], v[1]); },
      { { 3, 2 }, { 3, 2 } } },
    { "attend", [](const Inputs &v) { return ag::attend(v[0], v[1]); }, { { 3, 3, 2 }, { 3, 2 } } },
    { "transpose01", [](const Inputs &v) { return ag::transpose01(v[0]); }, { { 3, 3, 2 } } },
    { "mean_rows", [](const Inputs &v) { return ag::mean_rows(v[0]); }, { { 3, 4 } } },
    { "std_rows", [](const Inputs &v) { return ag::std_rows(v[0]); }, { { 3, 4 } } },
    { "concat_last", [](const Inputs &v) { return ag::concat_last(v[0], v[1]); },
      { { 2, 3 }, { 2, 2 } } },
    { "reshape", [](const Inputs &v) { return ag::reshape(v[0], { 3, 2 }); }, { { 2, 3 } } },
    { "sum", [](const Inputs &v) { return ag::sum(v[0]); }, { { 2, 3 } } },
    { "cross_entropy_rows",
      [targets, weights](const Inputs &v) {
        return ag::cross_entropy_rows(v[0], targets, weights);
      },
      { { 4, 3 } } },
    { "bce_with_logit_pos", [](const Inputs &v) { return ag::bce_with_logit(v[0], 1.0); }, { {} } },
    { "bce_with_logit_neg", [](const Inputs &v) { return ag::bce_with_logit(v[0], 0.0); }, { {} } },
    { "mse_on_sigmoid", [](const Inputs &v) { return ag::mse_on_sigmoid(v[0], 1.0); }, { {} } },
  };
}

double max_parameter_rel_error(GraphTransformer &model,
                               const std::function<ag::Var()> &loss_fn) {
  model.params().zero_grad();
  ag::backward(loss_fn());
  double worst = 0.0;
  const double h = 1e-5;
  for (const auto &[name, var]: model.params().entries()) {
    Tensor &value = var.node()->value;
    const Tensor grad = var.grad();
    const std::size_t stride = std::max<std::size_t>(1, value.size() / 3);
    for (std::size_t i = 0; i < value.size(); i += stride) {
      const double saved = value.data[i];
      ag::NoGradGuard guard;
      value.data[i] = saved + h;
      const double up = loss_fn().value().item();
      value.data[i] = saved - h;
      const double down = loss_fn().value().item();
      value.data[i] = saved;
      const double numeric = (up - down) / (2 * h);
      const double denom = std::max({ std::abs(numeric), std::abs(grad.data[i]),
                                      kGradRelFloor });
      worst = std::max(worst, std::abs(numeric - grad.data[i]) / denom);
    }
  }
  return worst;
}

} // namespace molguide::testing
