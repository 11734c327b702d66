//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/neural/autograd.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "molguide/common/error.hpp"

namespace molguide::ag {
namespace {
thread_local bool g_grad_enabled = true;
/// When set, backward writes gradients only into these nodes.
thread_local const std::unordered_set<const Node *> *g_restrict = nullptr;

void require(bool ok, const char *op, const std::string &detail) {
  if (!ok)
    throw UsageError(std::string(op) + ": " + detail);
}

void require_same(const Var &a, const Var &b, const char *op) {
  require(a.shape() == b.shape(), op,
          "shape mismatch " + shape_string(a.shape()) + " vs "
              + shape_string(b.shape()));
}

Var record(Tensor value, std::vector<Var> inputs,
           std::function<void(Node &)> fn) {
  auto node = std::make_shared<Node>();
  node->value = std::move(value);
  if (g_grad_enabled) {
    bool needs = false;
    for (const Var &v: inputs)
      needs = needs || v.requires_grad();
    if (needs) {
      node->requires_grad = true;
      node->parents.reserve(inputs.size());
      for (const Var &v: inputs)
        node->parents.push_back(v.shared());
      node->backward_fn = std::move(fn);
    }
  }
  return Var(std::move(node));
}

/// Parent k's gradient buffer if it needs one, else nullptr.
double *pgrad(Node &self, std::size_t k) {
  Node &p = *self.parents[k];
  if (!p.requires_grad || (g_restrict && !g_restrict->count(&p)))
    return nullptr;
  return p.grad_buffer().data.data();
}

const double *pval(Node &self, std::size_t k) {
  return self.parents[k]->value.data.data();
}

template <class F>
Var unary(const Var &a, F &&f, std::function<void(Node &)> back) {
  Tensor out(a.shape());
  const auto &x = a.value().data;
  for (std::size_t i = 0; i < x.size(); ++i)
    out.data[i] = f(x[i]);
  return record(std::move(out), { a }, std::move(back));
}
} // namespace

Tensor &Node::grad_buffer() {
  if (grad.shape != value.shape || grad.data.size() != value.data.size())
    grad = Tensor(value.shape, 0.0);
  return grad;
}

void Var::zero_grad() {
  if (node_)
    node_->grad = Tensor(node_->value.shape, 0.0);
}

Var leaf(Tensor value, bool requires_grad) {
  auto node = std::make_shared<Node>();
  node->value = std::move(value);
  node->requires_grad = requires_grad;
  return Var(std::move(node));
}

bool grad_enabled() noexcept { return g_grad_enabled; }

NoGradGuard::NoGradGuard(): previous_(g_grad_enabled) {
  g_grad_enabled = false;
}

NoGradGuard::~NoGradGuard() { g_grad_enabled = previous_; }

namespace {
/// Post-order over the recorded graph; reversed it is a topological order.
std::vector<Node *> post_order(const Var &root) {
  if (!root.defined() || !root.requires_grad())
    throw UsageError("backward: root is not part of a recorded graph");
  if (root.value().size() != 1)
    throw UsageError("backward: root must be a scalar");
  std::vector<Node *> order;
  std::unordered_set<Node *> seen;
  std::vector<std::pair<Node *, std::size_t>> stack { { root.node(), 0 } };
  seen.insert(root.node());
  while (!stack.empty()) {
    auto &[node, next] = stack.back();
    if (next < node->parents.size()) {
      Node *p = node->parents[next++].get();
      if (p->requires_grad && seen.insert(p).second)
        stack.emplace_back(p, 0);
      continue;
    }
    order.push_back(node);
    stack.pop_back();
  }
  return order;
}

void run_backward(const Var &root, const std::vector<Node *> &order,
                  const std::unordered_set<const Node *> *only) {
  struct Restore {
    const std::unordered_set<const Node *> *saved = g_restrict;
    ~Restore() { g_restrict = saved; }
  } restore;
  g_restrict = only;
  root.node()->grad_buffer().data[0] += 1.0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Node *n = *it;
    if (n->backward_fn && (!only || only->count(n))) {
      n->grad_buffer();
      n->backward_fn(*n);
    }
  }
}
} // namespace

void backward(const Var &root) {
  run_backward(root, post_order(root), nullptr);
}

void backward_to(const Var &root, std::span<const Var> inputs) {
  const std::vector<Node *> order = post_order(root);
  std::unordered_set<const Node *> relevant;
  for (const Var &v: inputs)
    if (v.defined())
      relevant.insert(v.node());
  for (Node *n: order)
    for (const auto &p: n->parents)
      if (relevant.count(p.get())) {
        relevant.insert(n);
        break;
      }
  run_backward(root, order, &relevant);
}

Var add(const Var &a, const Var &b) {
  require_same(a, b, "add");
  Tensor out(a.shape());
  for (std::size_t i = 0; i < out.size(); ++i)
    out.data[i] = a.value().data[i] + b.value().data[i];
  return record(std::move(out), { a, b }, [](Node &s) {
    const auto &g = s.grad.data;
    for (std::size_t k = 0; k < 2; ++k)
      if (double *d = pgrad(s, k))
        for (std::size_t i = 0; i < g.size(); ++i)
          d[i] += g[i];
  });
}

Var sub(const Var &a, const Var &b) {
  require_same(a, b, "sub");
  Tensor out(a.shape());
  for (std::size_t i = 0; i < out.size(); ++i)
    out.data[i] = a.value().data[i] - b.value().data[i];
  return record(std::move(out), { a, b }, [](Node &s) {
    const auto &g = s.grad.data;
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < g.size(); ++i)
        d[i] += g[i];
    if (double *d = pgrad(s, 1))
      for (std::size_t i = 0; i < g.size(); ++i)
        d[i] -= g[i];
  });
}

Var mul(const Var &a, const Var &b) {
  require_same(a, b, "mul");
  Tensor out(a.shape());
  for (std::size_t i = 0; i < out.size(); ++i)
    out.data[i] = a.value().data[i] * b.value().data[i];
  return record(std::move(out), { a, b }, [](Node &s) {
    const auto &g = s.grad.data;
    const double *x = pval(s, 0), *y = pval(s, 1);
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < g.size(); ++i)
        d[i] += g[i] * y[i];
    if (double *d = pgrad(s, 1))
      for (std::size_t i = 0; i < g.size(); ++i)
        d[i] += g[i] * x[i];
  });
}

Var scale(const Var &a, double c) {
  return unary(a, [c](double x) { return c * x; }, [c](Node &s) {
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < s.grad.size(); ++i)
        d[i] += c * s.grad.data[i];
  });
}

Var add_scalar(const Var &a, double c) {
  return unary(a, [c](double x) { return x + c; }, [](Node &s) {
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < s.grad.size(); ++i)
        d[i] += s.grad.data[i];
  });
}

Var add_row(const Var &a, const Var &row) {
  const std::size_t c = a.value().cols();
  require(row.value().rank() == 1 && row.value().size() == c, "add_row",
          "row length must equal the last dimension");
  Tensor out(a.shape());
  const auto &x = a.value().data;
  const auto &r = row.value().data;
  for (std::size_t i = 0; i < x.size(); ++i)
    out.data[i] = x[i] + r[i % c];
  return record(std::move(out), { a, row }, [c](Node &s) {
    const auto &g = s.grad.data;
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < g.size(); ++i)
        d[i] += g[i];
    if (double *d = pgrad(s, 1))
      for (std::size_t i = 0; i < g.size(); ++i)
        d[i % c] += g[i];
  });
}

Var mul_row(const Var &a, const Var &row) {
  const std::size_t c = a.value().cols();
  require(row.value().rank() == 1 && row.value().size() == c, "mul_row",
          "row length must equal the last dimension");
  Tensor out(a.shape());
  const auto &x = a.value().data;
  const auto &r = row.value().data;
  for (std::size_t i = 0; i < x.size(); ++i)
    out.data[i] = x[i] * r[i % c];
  return record(std::move(out), { a, row }, [c](Node &s) {
    const auto &g = s.grad.data;
    const double *x = pval(s, 0), *r = pval(s, 1);
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < g.size(); ++i)
        d[i] += g[i] * r[i % c];
    if (double *d = pgrad(s, 1))
      for (std::size_t i = 0; i < g.size(); ++i)
        d[i % c] += g[i] * x[i];
  });
}

Var linear(const Var &x, const Var &w, const Var &b) {
  const Tensor &xv = x.value();
  const Tensor &wv = w.value();
  require(wv.rank() == 2 && xv.rank() >= 1 && xv.cols() == wv.shape[0],
          "linear",
          "input " + shape_string(xv.shape) + " vs weight "
              + shape_string(wv.shape));
  const std::size_t in = wv.shape[0], outd = wv.shape[1], rows = xv.rows();
  if (b.defined())
    require(b.value().rank() == 1 && b.value().size() == outd, "linear",
            "bias length must equal the output width");

  Shape shape = xv.shape;
  shape.back() = outd;
  Tensor out(shape);
  const double *X = xv.data.data(), *W = wv.data.data();
  double *O = out.data.data();
  for (std::size_t r = 0; r < rows; ++r) {
    double *o = O + r * outd;
    if (b.defined())
      std::copy(b.value().data.begin(), b.value().data.end(), o);
    for (std::size_t i = 0; i < in; ++i) {
      const double xi = X[r * in + i];
      if (xi == 0.0)
        continue;
      const double *wr = W + i * outd;
      for (std::size_t k = 0; k < outd; ++k)
        o[k] += xi * wr[k];
    }
  }

  std::vector<Var> inputs { x, w };
  if (b.defined())
    inputs.push_back(b);
  const bool has_bias = b.defined();
  return record(std::move(out), std::move(inputs),
                [in, outd, rows, has_bias](Node &s) {
    const double *G = s.grad.data.data();
    const double *X = pval(s, 0), *W = pval(s, 1);
    if (double *dx = pgrad(s, 0))
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t i = 0; i < in; ++i) {
          const double *wr = W + i * outd;
          const double *g = G + r * outd;
          double acc = 0.0;
          for (std::size_t k = 0; k < outd; ++k)
            acc += g[k] * wr[k];
          dx[r * in + i] += acc;
        }
    if (double *dw = pgrad(s, 1))
      for (std::size_t r = 0; r < rows; ++r) {
        const double *g = G + r * outd;
        for (std::size_t i = 0; i < in; ++i) {
          const double xi = X[r * in + i];
          if (xi == 0.0)
            continue;
          double *dwr = dw + i * outd;
          for (std::size_t k = 0; k < outd; ++k)
            dwr[k] += xi * g[k];
        }
      }
    if (has_bias)
      if (double *db = pgrad(s, 2))
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t k = 0; k < outd; ++k)
            db[k] += G[r * outd + k];
  });
}

Var matmul(const Var &a, const Var &b) {
  require(a.value().rank() == 2, "matmul", "left operand must be a matrix");
  return linear(a, b, Var());
}

Var silu(const Var &a) {
  return unary(a, [](double x) { return x / (1.0 + std::exp(-x)); },
               [](Node &s) {
    if (double *d = pgrad(s, 0)) {
      const double *x = pval(s, 0);
      for (std::size_t i = 0; i < s.grad.size(); ++i) {
        const double sg = 1.0 / (1.0 + std::exp(-x[i]));
        d[i] += s.grad.data[i] * sg * (1.0 + x[i] * (1.0 - sg));
      }
    }
  });
}

Var sigmoid(const Var &a) {
  return unary(a, [](double x) { return 1.0 / (1.0 + std::exp(-x)); },
               [](Node &s) {
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < s.grad.size(); ++i) {
        const double y = s.value.data[i];
        d[i] += s.grad.data[i] * y * (1.0 - y);
      }
  });
}

Var exp(const Var &a) {
  return unary(a, [](double x) { return std::exp(x); }, [](Node &s) {
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < s.grad.size(); ++i)
        d[i] += s.grad.data[i] * s.value.data[i];
  });
}

Var log(const Var &a) {
  return unary(a, [](double x) { return std::log(x); }, [](Node &s) {
    if (double *d = pgrad(s, 0)) {
      const double *x = pval(s, 0);
      for (std::size_t i = 0; i < s.grad.size(); ++i)
        d[i] += s.grad.data[i] / x[i];
    }
  });
}

Var sqrt(const Var &a) {
  return unary(a, [](double x) { return std::sqrt(x); }, [](Node &s) {
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < s.grad.size(); ++i)
        d[i] += s.grad.data[i] * 0.5 / s.value.data[i];
  });
}

Var square(const Var &a) {
  return unary(a, [](double x) { return x * x; }, [](Node &s) {
    if (double *d = pgrad(s, 0)) {
      const double *x = pval(s, 0);
      for (std::size_t i = 0; i < s.grad.size(); ++i)
        d[i] += 2.0 * x[i] * s.grad.data[i];
    }
  });
}

Var layer_norm(const Var &x, const Var &gamma, const Var &beta, double eps) {
  const Tensor &xv = x.value();
  const std::size_t c = xv.cols(), rows = xv.rows();
  require(gamma.value().size() == c && beta.value().size() == c, "layer_norm",
          "affine parameters must match the last dimension");
  Tensor out(xv.shape);
  // xhat and 1/sigma per row are kept for the backward pass.
  auto xhat = std::make_shared<std::vector<double>>(xv.size());
  auto inv = std::make_shared<std::vector<double>>(rows);
  const double *g = gamma.value().data.data(), *bt = beta.value().data.data();
  for (std::size_t r = 0; r < rows; ++r) {
    const double *row = xv.data.data() + r * c;
    double mu = 0.0;
    for (std::size_t k = 0; k < c; ++k)
      mu += row[k];
    mu /= static_cast<double>(c);
    double var = 0.0;
    for (std::size_t k = 0; k < c; ++k)
      var += (row[k] - mu) * (row[k] - mu);
    var /= static_cast<double>(c);
    const double is = 1.0 / std::sqrt(var + eps);
    (*inv)[r] = is;
    for (std::size_t k = 0; k < c; ++k) {
      const double h = (row[k] - mu) * is;
      (*xhat)[r * c + k] = h;
      out.data[r * c + k] = g[k] * h + bt[k];
    }
  }
  return record(std::move(out), { x, gamma, beta },
                [c, rows, xhat, inv](Node &s) {
    const double *G = s.grad.data.data();
    const double *gam = pval(s, 1);
    double *dx = pgrad(s, 0), *dg = pgrad(s, 1), *db = pgrad(s, 2);
    std::vector<double> dh(c);
    for (std::size_t r = 0; r < rows; ++r) {
      const double *h = xhat->data() + r * c;
      const double *gr = G + r * c;
      double mean_dh = 0.0, mean_dh_h = 0.0;
      for (std::size_t k = 0; k < c; ++k) {
        if (dg)
          dg[k] += gr[k] * h[k];
        if (db)
          db[k] += gr[k];
        dh[k] = gr[k] * gam[k];
        mean_dh += dh[k];
        mean_dh_h += dh[k] * h[k];
      }
      if (!dx)
        continue;
      mean_dh /= static_cast<double>(c);
      mean_dh_h /= static_cast<double>(c);
      for (std::size_t k = 0; k < c; ++k)
        dx[r * c + k] += (*inv)[r] * (dh[k] - mean_dh - h[k] * mean_dh_h);
    }
  });
}

Var softmax_dim1(const Var &x) {
  const Tensor &xv = x.value();
  require(xv.rank() == 3 && xv.shape[0] == xv.shape[1], "softmax_dim1",
          "expects [n, n, c], got " + shape_string(xv.shape));
  const std::size_t n = xv.shape[0], c = xv.shape[2];
  Tensor out(xv.shape);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < c; ++k) {
      double mx = -INFINITY;
      for (std::size_t j = 0; j < n; ++j)
        mx = std::max(mx, xv.data[(i * n + j) * c + k]);
      double z = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        double e = std::exp(xv.data[(i * n + j) * c + k] - mx);
        out.data[(i * n + j) * c + k] = e;
        z += e;
      }
      for (std::size_t j = 0; j < n; ++j)
        out.data[(i * n + j) * c + k] /= z;
    }
  return record(std::move(out), { x }, [n, c](Node &s) {
    double *d = pgrad(s, 0);
    if (!d)
      return;
    const double *y = s.value.data.data(), *g = s.grad.data.data();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < c; ++k) {
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          dot += g[(i * n + j) * c + k] * y[(i * n + j) * c + k];
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t p = (i * n + j) * c + k;
          d[p] += y[p] * (g[p] - dot);
        }
      }
  });
}

Var pair_product(const Var &q, const Var &k) {
  require_same(q, k, "pair_product");
  require(q.value().rank() == 2, "pair_product", "expects [n, c] operands");
  const std::size_t n = q.shape()[0], c = q.shape()[1];
  Tensor out({ n, n, c });
  const double *Q = q.value().data.data(), *K = k.value().data.data();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t h = 0; h < c; ++h)
        out.data[(i * n + j) * c + h] = Q[i * c + h] * K[j * c + h];
  return record(std::move(out), { q, k }, [n, c](Node &s) {
    const double *G = s.grad.data.data();
    const double *Q = pval(s, 0), *K = pval(s, 1);
    double *dq = pgrad(s, 0), *dk = pgrad(s, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t h = 0; h < c; ++h) {
          const double g = G[(i * n + j) * c + h];
          if (dq)
            dq[i * c + h] += g * K[j * c + h];
          if (dk)
            dk[j * c + h] += g * Q[i * c + h];
        }
  });
}

Var attend(const Var &a, const Var &v) {
  const Tensor &av = a.value(), &vv = v.value();
  require(av.rank() == 3 && vv.rank() == 2 && av.shape[0] == vv.shape[0]
              && av.shape[1] == vv.shape[0] && av.shape[2] == vv.shape[1],
          "attend",
          "weights " + shape_string(av.shape) + " vs values "
              + shape_string(vv.shape));
  const std::size_t n = vv.shape[0], c = vv.shape[1];
  Tensor out({ n, c });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t h = 0; h < c; ++h)
        out.data[i * c + h] += av.data[(i * n + j) * c + h] * vv.data[j * c + h];
  return record(std::move(out), { a, v }, [n, c](Node &s) {
    const double *G = s.grad.data.data();
    const double *A = pval(s, 0), *V = pval(s, 1);
    double *da = pgrad(s, 0), *dv = pgrad(s, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t h = 0; h < c; ++h) {
          const double g = G[i * c + h];
          if (da)
            da[(i * n + j) * c + h] += g * V[j * c + h];
          if (dv)
            dv[j * c + h] += g * A[(i * n + j) * c + h];
        }
  });
}

Var transpose01(const Var &x) {
  const Tensor &xv = x.value();
  require(xv.rank() == 3 && xv.shape[0] == xv.shape[1], "transpose01",
          "expects [n, n, c]");
  const std::size_t n = xv.shape[0], c = xv.shape[2];
  Tensor out(xv.shape);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      std::copy_n(xv.data.data() + (j * n + i) * c, c,
                  out.data.data() + (i * n + j) * c);
  return record(std::move(out), { x }, [n, c](Node &s) {
    double *d = pgrad(s, 0);
    if (!d)
      return;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t h = 0; h < c; ++h)
          d[(j * n + i) * c + h] += s.grad.data[(i * n + j) * c + h];
  });
}

Var mean_rows(const Var &x) {
  const Tensor &xv = x.value();
  const std::size_t c = xv.cols(), rows = xv.rows();
  require(rows > 0, "mean_rows", "no rows");
  Tensor out({ c });
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < c; ++k)
      out.data[k] += xv.data[r * c + k];
  for (double &v: out.data)
    v /= static_cast<double>(rows);
  return record(std::move(out), { x }, [c, rows](Node &s) {
    double *d = pgrad(s, 0);
    if (!d)
      return;
    const double inv = 1.0 / static_cast<double>(rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < c; ++k)
        d[r * c + k] += s.grad.data[k] * inv;
  });
}

Var std_rows(const Var &x, double eps) {
  Var mu = mean_rows(x);
  Var centered = add_row(x, scale(mu, -1.0));
  return sqrt(add_scalar(mean_rows(square(centered)), eps));
}

Var concat_last(const Var &a, const Var &b) {
  const Tensor &av = a.value(), &bv = b.value();
  require(av.rank() == bv.rank() && av.rank() >= 1 && av.rows() == bv.rows(),
          "concat_last",
          shape_string(av.shape) + " vs " + shape_string(bv.shape));
  for (std::size_t k = 0; k + 1 < av.rank(); ++k)
    require(av.shape[k] == bv.shape[k], "concat_last", "leading dims differ");
  const std::size_t ca = av.cols(), cb = bv.cols(), rows = av.rows();
  Shape shape = av.shape;
  shape.back() = ca + cb;
  Tensor out(shape);
  for (std::size_t r = 0; r < rows; ++r) {
    std::copy_n(av.data.data() + r * ca, ca, out.data.data() + r * (ca + cb));
    std::copy_n(bv.data.data() + r * cb, cb,
                out.data.data() + r * (ca + cb) + ca);
  }
  return record(std::move(out), { a, b }, [ca, cb, rows](Node &s) {
    double *da = pgrad(s, 0), *db = pgrad(s, 1);
    const double *G = s.grad.data.data();
    for (std::size_t r = 0; r < rows; ++r) {
      if (da)
        for (std::size_t k = 0; k < ca; ++k)
          da[r * ca + k] += G[r * (ca + cb) + k];
      if (db)
        for (std::size_t k = 0; k < cb; ++k)
          db[r * cb + k] += G[r * (ca + cb) + ca + k];
    }
  });
}

Var reshape(const Var &a, Shape shape) {
  require(numel(shape) == a.value().size(), "reshape",
          shape_string(a.shape()) + " to " + shape_string(shape));
  Tensor out(std::move(shape), a.value().data);
  return record(std::move(out), { a }, [](Node &s) {
    if (double *d = pgrad(s, 0))
      for (std::size_t i = 0; i < s.grad.size(); ++i)
        d[i] += s.grad.data[i];
  });
}

Var sum(const Var &a) {
  double total = 0.0;
  for (double x: a.value().data)
    total += x;
  return record(Tensor::scalar(total), { a }, [](Node &s) {
    if (double *d = pgrad(s, 0)) {
      const double g = s.grad.data[0];
      for (std::size_t i = 0; i < s.parents[0]->value.size(); ++i)
        d[i] += g;
    }
  });
}

Var cross_entropy_rows(const Var &logits, std::span<const int> targets,
                       std::span<const double> weights) {
  const Tensor &z = logits.value();
  const std::size_t c = z.cols(), rows = z.rows();
  require(targets.size() == rows && weights.size() == rows,
          "cross_entropy_rows", "one target and weight per row required");
  auto probs = std::make_shared<std::vector<double>>(z.size());
  double loss = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    const double *row = z.data.data() + r * c;
    double mx = -INFINITY;
    for (std::size_t k = 0; k < c; ++k)
      mx = std::max(mx, row[k]);
    double zsum = 0.0;
    for (std::size_t k = 0; k < c; ++k)
      zsum += std::exp(row[k] - mx);
    const double lse = mx + std::log(zsum);
    for (std::size_t k = 0; k < c; ++k)
      (*probs)[r * c + k] = std::exp(row[k] - lse);
    require(targets[r] >= 0 && static_cast<std::size_t>(targets[r]) < c,
            "cross_entropy_rows", "target out of range");
    if (weights[r] != 0.0)
      loss += weights[r] * (lse - row[targets[r]]);
  }
  std::vector<int> t(targets.begin(), targets.end());
  std::vector<double> w(weights.begin(), weights.end());
  return record(Tensor::scalar(loss), { logits },
                [c, rows, probs, t = std::move(t), w = std::move(w)](Node &s) {
    double *d = pgrad(s, 0);
    if (!d)
      return;
    const double g = s.grad.data[0];
    for (std::size_t r = 0; r < rows; ++r) {
      if (w[r] == 0.0)
        continue;
      const double f = g * w[r];
      for (std::size_t k = 0; k < c; ++k)
        d[r * c + k] += f * ((*probs)[r * c + k]
                             - (static_cast<int>(k) == t[r] ? 1.0 : 0.0));
    }
  });
}

Var bce_with_logit(const Var &logit, double y) {
  require(logit.value().size() == 1, "bce_with_logit", "expects a scalar");
  const double z = logit.value().data[0];
  const double loss = std::max(z, 0.0) - y * z + std::log1p(std::exp(-std::abs(z)));
  return record(Tensor::scalar(loss), { logit }, [z, y](Node &s) {
    if (double *d = pgrad(s, 0))
      d[0] += s.grad.data[0] * (1.0 / (1.0 + std::exp(-z)) - y);
  });
}

Var mse_on_sigmoid(const Var &logit, double y) {
  require(logit.value().size() == 1, "mse_on_sigmoid", "expects a scalar");
  const double z = logit.value().data[0];
  const double p = 1.0 / (1.0 + std::exp(-z));
  return record(Tensor::scalar((p - y) * (p - y)), { logit }, [p, y](Node &s) {
    if (double *d = pgrad(s, 0))
      d[0] += s.grad.data[0] * 2.0 * (p - y) * p * (1.0 - p);
  });
}

} // namespace molguide::ag
