//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_NEURAL_GRAPH_TRANSFORMER_HPP_
#define MOLGUIDE_NEURAL_GRAPH_TRANSFORMER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "molguide/diffusion/state.hpp"
#include "molguide/molgraph/features.hpp"
#include "molguide/neural/autograd.hpp"
#include "molguide/neural/params.hpp"

namespace molguide {

struct GraphTransformerConfig {
  std::size_t layers = 4;
  std::size_t node_width = 64;
  std::size_t edge_width = 32;
  std::size_t global_width = 32;
  std::size_t heads = 4;
  /// Only 0 is supported; kept so configs can state it explicitly.
  double dropout = 0.0;

  /// Throws UsageError for zero sizes, node_width % heads != 0, or dropout
  /// other than 0.
  void validate() const;

  friend bool operator==(const GraphTransformerConfig &,
                         const GraphTransformerConfig &) = default;
};

enum class ModelHead {
  kDenoiser,
  kClassifier,
};

struct DenoiserOutput {
  /// [n, atom classes]
  ag::Var node_logits;
  /// [n, n, edge classes], symmetric in the first two indices.
  ag::Var edge_logits;
};

/// Node and edge channels attend over node pairs; pair scores are modulated
/// by edge embeddings and every block is modulated by the global vector.
class GraphTransformer {
public:
  GraphTransformer(const GraphTransformerConfig &config,
                   const StateSpace &space, ModelHead head,
                   std::uint64_t init_seed);

  const GraphTransformerConfig &config() const noexcept { return cfg_; }
  const StateSpace &space() const noexcept { return space_; }
  ModelHead head() const noexcept { return head_; }
  ParameterStore &params() noexcept { return params_; }
  const ParameterStore &params() const noexcept { return params_; }

  /// x: [n, a] node one-hot (or relaxed) channels, e: [n, n, b]. The
  /// auxiliary features enter as constants.
  DenoiserOutput denoise(const ag::Var &x, const ag::Var &e,
                         const AuxFeatures &aux) const;
  /// Scalar logit of the positive label.
  ag::Var classify(const ag::Var &x, const ag::Var &e,
                   const AuxFeatures &aux) const;

private:
  struct Linear {
    ag::Var w, b;
    ag::Var operator()(const ag::Var &x) const { return ag::linear(x, w, b); }
  };
  struct Norm {
    ag::Var gamma, beta;
    ag::Var operator()(const ag::Var &x) const {
      return ag::layer_norm(x, gamma, beta);
    }
  };
  struct Mlp {
    Linear first, second;
    ag::Var operator()(const ag::Var &x) const {
      return second(ag::silu(first(x)));
    }
  };
  struct Layer {
    Linear q, k, v;
    Linear e_mul, e_add;
    Linear ye_mul, ye_add, yx_mul, yx_add;
    Linear e_out, x_out;
    Linear y_self, x_to_y, e_to_y;
    Mlp y_out;
    Norm norm_x1, norm_e1, norm_y1;
    Mlp ffn_x, ffn_e, ffn_y;
    Norm norm_x2, norm_e2, norm_y2;
  };
  struct Trunk {
    ag::Var x, e, y;
  };

  Linear make_linear(const std::string &name, std::size_t in, std::size_t out,
                     Rng &rng);
  Norm make_norm(const std::string &name, std::size_t width);
  Mlp make_mlp(const std::string &name, std::size_t in, std::size_t hidden,
               std::size_t out, Rng &rng);

  Trunk trunk(const ag::Var &x, const ag::Var &e, const AuxFeatures &aux) const;
  void check_inputs(const ag::Var &x, const ag::Var &e,
                    const AuxFeatures &aux) const;

  GraphTransformerConfig cfg_;
  StateSpace space_;
  ModelHead head_;
  ParameterStore params_;

  Mlp in_x_, in_e_, in_y_;
  std::vector<Layer> layers_;
  Mlp out_x_, out_e_, out_cls_;
  ag::Var head_sum_, head_spread_;
};

} // namespace molguide

#endif // MOLGUIDE_NEURAL_GRAPH_TRANSFORMER_HPP_
