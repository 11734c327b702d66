//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/neural/graph_transformer.hpp"

#include <cmath>

#include "molguide/common/error.hpp"

namespace molguide {
namespace {
ag::Var film(const ag::Var &h, const ag::Var &mul, const ag::Var &add) {
  return ag::add_row(ag::mul_row(h, ag::add_scalar(mul, 1.0)), add);
}

ag::Var pool(const ag::Var &h) {
  return ag::concat_last(ag::mean_rows(h), ag::std_rows(h));
}
} // namespace

void GraphTransformerConfig::validate() const {
  if (layers == 0 || node_width == 0 || edge_width == 0 || global_width == 0
      || heads == 0)
    throw UsageError("graph transformer sizes must be positive");
  if (node_width % heads != 0)
    throw UsageError("node width must be divisible by the head count");
  if (dropout != 0.0)
    throw UsageError("dropout is not supported; set it to 0");
}

GraphTransformer::Linear GraphTransformer::make_linear(const std::string &name,
                                                       std::size_t in,
                                                       std::size_t out,
                                                       Rng &rng) {
  return { params_.add(name + ".w", glorot_uniform(in, out, rng)),
           params_.add(name + ".b", Tensor({ out }, 0.0)) };
}

GraphTransformer::Norm GraphTransformer::make_norm(const std::string &name,
                                                   std::size_t width) {
  return { params_.add(name + ".gamma", Tensor({ width }, 1.0)),
           params_.add(name + ".beta", Tensor({ width }, 0.0)) };
}

GraphTransformer::Mlp GraphTransformer::make_mlp(const std::string &name,
                                                 std::size_t in,
                                                 std::size_t hidden,
                                                 std::size_t out, Rng &rng) {
  Linear a = make_linear(name + ".0", in, hidden, rng);
  Linear b = make_linear(name + ".1", hidden, out, rng);
  return { a, b };
}

GraphTransformer::GraphTransformer(const GraphTransformerConfig &config,
                                   const StateSpace &space, ModelHead head,
                                   std::uint64_t init_seed)
    : cfg_(config), space_(space), head_(head) {
  cfg_.validate();
  Rng rng(init_seed);
  const std::size_t dx = cfg_.node_width, de = cfg_.edge_width,
                    dy = cfg_.global_width;
  const std::size_t a = space.atom_classes, b = space.edge_classes;

  in_x_ = make_mlp("in_x", a + AuxFeatures::kNodeWidth, dx, dx, rng);
  in_e_ = make_mlp("in_e", b, de, de, rng);
  in_y_ = make_mlp("in_y", AuxFeatures::kGlobalWidth, dy, dy, rng);

  for (std::size_t l = 0; l < cfg_.layers; ++l) {
    const std::string p = "layer" + std::to_string(l) + ".";
    Layer L;
    L.q = make_linear(p + "q", dx, dx, rng);
    L.k = make_linear(p + "k", dx, dx, rng);
    L.v = make_linear(p + "v", dx, dx, rng);
    L.e_mul = make_linear(p + "e_mul", de, dx, rng);
    L.e_add = make_linear(p + "e_add", de, dx, rng);
    L.ye_mul = make_linear(p + "ye_mul", dy, dx, rng);
    L.ye_add = make_linear(p + "ye_add", dy, dx, rng);
    L.yx_mul = make_linear(p + "yx_mul", dy, dx, rng);
    L.yx_add = make_linear(p + "yx_add", dy, dx, rng);
    L.e_out = make_linear(p + "e_out", dx, de, rng);
    L.x_out = make_linear(p + "x_out", dx, dx, rng);
    L.y_self = make_linear(p + "y_self", dy, dy, rng);
    L.x_to_y = make_linear(p + "x_to_y", 2 * dx, dy, rng);
    L.e_to_y = make_linear(p + "e_to_y", 2 * de, dy, rng);
    L.y_out = make_mlp(p + "y_out", dy, dy, dy, rng);
    L.norm_x1 = make_norm(p + "norm_x1", dx);
    L.norm_e1 = make_norm(p + "norm_e1", de);
    L.norm_y1 = make_norm(p + "norm_y1", dy);
    L.ffn_x = make_mlp(p + "ffn_x", dx, 2 * dx, dx, rng);
    L.ffn_e = make_mlp(p + "ffn_e", de, 2 * de, de, rng);
    L.ffn_y = make_mlp(p + "ffn_y", dy, 2 * dy, dy, rng);
    L.norm_x2 = make_norm(p + "norm_x2", dx);
    L.norm_e2 = make_norm(p + "norm_e2", de);
    L.norm_y2 = make_norm(p + "norm_y2", dy);
    layers_.push_back(L);
  }

  if (head_ == ModelHead::kDenoiser) {
    out_x_ = make_mlp("out_x", dx, dx, a, rng);
    out_e_ = make_mlp("out_e", de, de, b, rng);
  } else {
    out_cls_ = make_mlp("out_cls", dx + dy, dy, 1, rng);
  }

  // Fixed matrices summing channels into heads and spreading them back.
  const std::size_t h = cfg_.heads, width = dx / h;
  Tensor sum({ dx, h }, 0.0), spread({ h, dx }, 0.0);
  for (std::size_t c = 0; c < dx; ++c) {
    sum.data[c * h + c / width] = 1.0 / std::sqrt(static_cast<double>(width));
    spread.data[(c / width) * dx + c] = 1.0;
  }
  head_sum_ = ag::constant(std::move(sum));
  head_spread_ = ag::constant(std::move(spread));
}

void GraphTransformer::check_inputs(const ag::Var &x, const ag::Var &e,
                                    const AuxFeatures &aux) const {
  const auto &xs = x.shape();
  const auto &es = e.shape();
  if (xs.size() != 2 || xs[1] != space_.atom_classes || xs[0] == 0)
    throw UsageError("node input must be [n, " + std::to_string(space_.atom_classes)
                     + "], got " + shape_string(xs));
  const std::size_t n = xs[0];
  if (es != Shape { n, n, space_.edge_classes })
    throw UsageError("edge input must be [n, n, "
                     + std::to_string(space_.edge_classes) + "], got "
                     + shape_string(es));
  if (aux.n != n)
    throw UsageError("auxiliary features computed for a different graph size");
}

GraphTransformer::Trunk GraphTransformer::trunk(const ag::Var &x_in,
                                                const ag::Var &e_in,
                                                const AuxFeatures &aux) const {
  check_inputs(x_in, e_in, aux);
  const std::size_t n = x_in.shape()[0];
  const std::size_t dx = cfg_.node_width, de = cfg_.edge_width;

  ag::Var node_aux = ag::constant(
      Tensor({ n, AuxFeatures::kNodeWidth }, aux.node_matrix()));
  ag::Var global = ag::constant(
      Tensor({ AuxFeatures::kGlobalWidth }, aux.global_vector()));

  ag::Var x = in_x_(ag::concat_last(x_in, node_aux));
  ag::Var e = in_e_(e_in);
  ag::Var y = in_y_(global);

  for (const Layer &L: layers_) {
    ag::Var q = L.q(x), k = L.k(x), v = L.v(x);
    ag::Var pair = ag::scale(ag::pair_product(q, k),
                             1.0 / std::sqrt(static_cast<double>(dx / cfg_.heads)));
    pair = ag::add(ag::mul(pair, ag::add_scalar(L.e_mul(e), 1.0)), L.e_add(e));

    ag::Var new_e = L.e_out(film(pair, L.ye_mul(y), L.ye_add(y)));

    ag::Var scores = ag::linear(pair, head_sum_, ag::Var());
    ag::Var weights = ag::linear(ag::softmax_dim1(scores), head_spread_,
                                 ag::Var());
    ag::Var attended = ag::attend(weights, v);
    ag::Var new_x = L.x_out(film(attended, L.yx_mul(y), L.yx_add(y)));

    ag::Var e_rows = ag::reshape(e, { n * n, de });
    ag::Var new_y = ag::add(ag::add(L.y_self(y), L.x_to_y(pool(x))),
                            L.e_to_y(pool(e_rows)));
    new_y = L.y_out(new_y);

    x = L.norm_x1(ag::add(x, new_x));
    e = L.norm_e1(ag::add(e, new_e));
    y = L.norm_y1(ag::add(y, new_y));

    x = L.norm_x2(ag::add(x, L.ffn_x(x)));
    e = L.norm_e2(ag::add(e, L.ffn_e(e)));
    y = L.norm_y2(ag::add(y, L.ffn_y(y)));
  }
  return { x, e, y };
}

DenoiserOutput GraphTransformer::denoise(const ag::Var &x, const ag::Var &e,
                                         const AuxFeatures &aux) const {
  if (head_ != ModelHead::kDenoiser)
    throw UsageError("model was built with a classifier head");
  Trunk t = trunk(x, e, aux);
  ag::Var edge = out_e_(t.e);
  edge = ag::scale(ag::add(edge, ag::transpose01(edge)), 0.5);
  return { out_x_(t.x), edge };
}

ag::Var GraphTransformer::classify(const ag::Var &x, const ag::Var &e,
                                   const AuxFeatures &aux) const {
  if (head_ != ModelHead::kClassifier)
    throw UsageError("model was built with a denoiser head");
  Trunk t = trunk(x, e, aux);
  ag::Var h = ag::concat_last(ag::mean_rows(t.x), t.y);
  return ag::reshape(out_cls_(h), {});
}

} // namespace molguide
