//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "molguide/common/error.hpp"
#include "molguide/diffusion/schedule.hpp"
#include "molguide/guidance/classifier.hpp"
#include "molguide/guidance/guided_sampler.hpp"

namespace molguide {
namespace {

constexpr StateSpace kToySpace { 2, 3 };

GraphTransformerConfig tiny_config() {
  GraphTransformerConfig c;
  c.layers = 1;
  c.node_width = 8;
  c.edge_width = 4;
  c.global_width = 4;
  c.heads = 2;
  return c;
}

OneHotGraph random_toy_graph(std::size_t n, Rng &rng) {
  OneHotGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    g.set_node(i, static_cast<int>(rng.below(kToySpace.atom_classes)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.set_edge(i, j, static_cast<int>(rng.below(kToySpace.edge_classes)));
  return g;
}

bool has_double(const OneHotGraph &g) {
  return std::find(g.edges().begin(), g.edges().end(), 2) != g.edges().end();
}

TransitionModel toy_transitions(int T) {
  Marginals m { { 0.5, 0.5 }, { 0.5, 0.3, 0.2 } };
  return build_transitions(NoiseSchedule::cosine(T), m);
}

std::vector<LabeledGraph> labeled(std::size_t pos, std::size_t neg) {
  std::vector<LabeledGraph> out;
  for (std::size_t i = 0; i < pos + neg; ++i) {
    OneHotGraph g(1);
    g.set_node(0, static_cast<int>(i % 2));
    out.push_back({ g, i < pos ? 1 : 0 });
  }
  return out;
}

TEST(Upsample, ImbalancedDatasetCounts) {
  auto data = labeled(328, 9672);
  // Remember each item's origin through a unique node pattern.
  for (std::size_t i = 0; i < data.size(); ++i) {
    OneHotGraph g(1);
    g.set_node(0, static_cast<int>(i));
    data[i].graph = g;
  }
  Rng rng(1);
  auto out = upsample_balance(data, rng);
  std::size_t pos = 0;
  std::map<int, int> copies;
  for (const auto &item: out)
    if (item.label == 1) {
      ++pos;
      ++copies[item.graph.node(0)];
    }
  EXPECT_EQ(pos, 9672u);
  EXPECT_EQ(out.size() - pos, 9672u);
  ASSERT_EQ(copies.size(), 328u);
  int with30 = 0;
  for (auto [id, c]: copies) {
    EXPECT_TRUE(c == 29 || c == 30) << c;
    with30 += c == 30;
  }
  EXPECT_EQ(with30, 9672 - 29 * 328);
}

TEST(Upsample, SmallAndBalancedCases) {
  Rng rng(2);
  auto out = upsample_balance(labeled(1, 4), rng);
  EXPECT_EQ(std::count_if(out.begin(), out.end(), [](auto &x) { return x.label == 1; }), 4);
  EXPECT_EQ(out.size(), 8u);

  auto balanced = labeled(5, 5);
  auto shuffled = upsample_balance(balanced, rng);
  ASSERT_EQ(shuffled.size(), 10u);
  auto key = [](const LabeledGraph &x) { return std::pair(x.label, x.graph.node(0)); };
  std::vector<std::pair<int, int>> a, b;
  for (auto &x: balanced)
    a.push_back(key(x));
  for (auto &x: shuffled)
    b.push_back(key(x));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);

  EXPECT_THROW(upsample_balance(labeled(0, 3), rng), UsageError);
  EXPECT_THROW(upsample_balance(labeled(3, 0), rng), UsageError);
  auto bad = labeled(1, 1);
  bad[0].label = 2;
  EXPECT_THROW(upsample_balance(bad, rng), DataError);
}

TEST(ClassifierLoss, MseExamples) {
  auto at = [](double logit, int y, ClassifierLoss l) {
    return classifier_loss(ag::constant(Tensor::scalar(logit)), y, l).value().item();
  };
  EXPECT_DOUBLE_EQ(at(0.0, 1, ClassifierLoss::kMse), 0.25);
  EXPECT_LT(at(50.0, 1, ClassifierLoss::kMse), 1e-40);
  EXPECT_LT(at(-50.0, 0, ClassifierLoss::kMse), 1e-40);
  EXPECT_NEAR(at(0.0, 1, ClassifierLoss::kBce), std::log(2.0), 1e-15);
  EXPECT_EQ(parse_classifier_loss("mse"), ClassifierLoss::kMse);
  EXPECT_EQ(classifier_loss_name(ClassifierLoss::kBce), "bce");
  EXPECT_THROW(parse_classifier_loss("hinge"), UsageError);
}

TEST(RocAuc, Fixtures) {
  std::vector<int> y { 0, 0, 1, 1 };
  EXPECT_EQ(roc_auc(std::vector<double> { 0.1, 0.2, 0.3, 0.4 }, y), 1.0);
  EXPECT_EQ(roc_auc(std::vector<double> { 0.4, 0.3, 0.2, 0.1 }, y), 0.0);
  EXPECT_EQ(roc_auc(std::vector<double> { 0.5, 0.5, 0.5, 0.5 }, y), 0.5);
  // Pairs (pos, neg): (0.3 vs 0.1, 0.35) -> 1, 0; (0.4 vs both) -> 2.
  EXPECT_EQ(roc_auc(std::vector<double> { 0.1, 0.35, 0.3, 0.4 }, y), 0.75);
  EXPECT_THROW(roc_auc(std::vector<double> { 0.1, 0.2 }, std::vector<int> { 1, 1 }),
               UsageError);
}

ElementDistributions two_class_element(double p0, double p1) {
  ElementDistributions d(1, 2, 2);
  d.node = { p0, p1 };
  d.edge = { 1.0, 0.0 };
  return d;
}

TEST(GuidedReweight, ForcedArithmetic) {
  ElementDistributions base = two_class_element(0.5, 0.5);
  GraphGradient g { 1, { std::log(3.0) / 10.0, 0.0 }, { 0.0, 0.0 } };
  GuidanceConfig cfg;
  cfg.lambda = 10.0;
  auto out = guided_reweight(base, g, cfg);
  EXPECT_NEAR(out.node[0], 0.75, 1e-15);
  EXPECT_NEAR(out.node[1], 0.25, 1e-15);
  cfg.sign = -1;
  out = guided_reweight(base, g, cfg);
  EXPECT_NEAR(out.node[0], 0.25, 1e-15);
}

TEST(GuidedReweight, IdentityCases) {
  Rng rng(5);
  ElementDistributions base(3, 2, 3);
  for (auto *v: { &base.node, &base.edge })
    for (double &x: *v)
      x = rng.uniform();
  auto normalize = [](std::vector<double> &v, std::size_t c) {
    for (std::size_t r = 0; r * c < v.size(); ++r) {
      double s = std::accumulate(v.begin() + r * c, v.begin() + (r + 1) * c, 0.0);
      for (std::size_t k = 0; k < c; ++k)
        v[r * c + k] /= s;
    }
  };
  normalize(base.node, 2);
  normalize(base.edge, 3);
  GraphGradient grad { 3, std::vector<double>(6), std::vector<double>(27) };
  for (double &x: grad.node)
    x = rng.uniform();
  GuidanceConfig cfg;
  cfg.lambda = 0.0;
  auto same = guided_reweight(base, grad, cfg);
  EXPECT_EQ(same.node, base.node);
  EXPECT_EQ(same.edge, base.edge);

  cfg.lambda = 1000.0;
  GraphGradient zero { 3, std::vector<double>(6, 0.0), std::vector<double>(27, 0.0) };
  auto z = guided_reweight(base, zero, cfg);
  for (std::size_t i = 0; i < base.node.size(); ++i)
    EXPECT_NEAR(z.node[i], base.node[i], 1e-15);
  for (std::size_t i = 0; i < base.edge.size(); ++i)
    EXPECT_NEAR(z.edge[i], base.edge[i], 1e-15);

  GuidanceConfig bad;
  bad.lambda = -1.0;
  EXPECT_THROW(guided_reweight(base, zero, bad), UsageError);
  bad = {};
  bad.sign = 0;
  EXPECT_THROW(guided_reweight(base, zero, bad), UsageError);
}

TEST(GuidedReweight, StableAndNormalizedAtLargeScale) {
  Rng rng(6);
  for (int round = 0; round < 200; ++round) {
    ElementDistributions base(2, 3, 4);
    for (auto *v: { &base.node, &base.edge }) {
      const std::size_t c = v == &base.node ? 3 : 4;
      for (std::size_t r = 0; r * c < v->size(); ++r) {
        double s = 0.0;
        for (std::size_t k = 0; k < c; ++k)
          s += (*v)[r * c + k] = rng.uniform() < 0.2 ? 0.0 : rng.uniform();
        if (s == 0.0)
          s += (*v)[r * c] = 1.0;
        for (std::size_t k = 0; k < c; ++k)
          (*v)[r * c + k] /= s;
      }
    }
    GraphGradient grad { 2, std::vector<double>(6), std::vector<double>(16) };
    for (auto *v: { &grad.node, &grad.edge })
      for (double &x: *v)
        x = rng.uniform() * 2.0 - 1.0;
    GuidanceConfig cfg;
    cfg.lambda = 1000.0;
    auto out = guided_reweight(base, grad, cfg);
    for (auto [v, c]: { std::pair(&out.node, 3u), std::pair(&out.edge, 4u) })
      for (std::size_t r = 0; r * c < v->size(); ++r) {
        double s = 0.0;
        for (std::size_t k = 0; k < c; ++k) {
          ASSERT_TRUE(std::isfinite((*v)[r * c + k]));
          s += (*v)[r * c + k];
        }
        EXPECT_NEAR(s, 1.0, 1e-10);
      }
  }
}

// Two nodes with two classes and one undirected edge with two classes:
// the joint over all eight next states, reweighted by exp(sign * lambda *
// <grad, G>), must factor into the per-element reweighted distributions.
TEST(GuidedReweight, FactorizationMatchesEnumeration) {
  Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    ElementDistributions base(2, 2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      const double p = 0.05 + 0.9 * rng.uniform();
      base.node[i * 2] = p;
      base.node[i * 2 + 1] = 1.0 - p;
    }
    const double pe = 0.05 + 0.9 * rng.uniform();
    for (std::size_t idx: { 1u, 2u }) {
      base.edge[idx * 2] = pe;
      base.edge[idx * 2 + 1] = 1.0 - pe;
    }
    base.edge[0] = base.edge[6] = 1.0;
    GraphGradient grad { 2, std::vector<double>(4), std::vector<double>(8, 0.0) };
    for (double &x: grad.node)
      x = rng.uniform() - 0.5;
    for (std::size_t k = 0; k < 2; ++k)
      grad.edge[1 * 2 + k] = grad.edge[2 * 2 + k] = rng.uniform() - 0.5;
    GuidanceConfig cfg;
    cfg.lambda = 3.0 * rng.uniform();
    cfg.sign = round % 2 ? 1 : -1;

    auto out = guided_reweight(base, grad, cfg);
    double weights[2][2][2], z = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int e = 0; e < 2; ++e) {
          const double inner = grad.node[a] + grad.node[2 + b] + grad.edge[2 + e];
          z += weights[a][b][e] = base.node[a] * base.node[2 + b] * base.edge[2 + e]
                                  * std::exp(cfg.sign * cfg.lambda * inner);
        }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int e = 0; e < 2; ++e)
          EXPECT_NEAR(out.node[a] * out.node[2 + b] * out.edge[2 + e],
                      weights[a][b][e] / z, 1e-10);
  }
}

TEST(ClassifierGrad, ShapeSymmetryAndFiniteDifferences) {
  GraphTransformer cls(tiny_config(), kToySpace, ModelHead::kClassifier, 3);
  Rng rng(8);
  OneHotGraph g = random_toy_graph(4, rng);
  const int t = 3, T = 10;
  for (ClassifierLoss loss: { ClassifierLoss::kBce, ClassifierLoss::kMse }) {
    GraphGradient grad = classifier_log_grad(cls, loss, g, t, T, 1);
    const std::size_t n = 4, a = 2, b = 3;
    ASSERT_EQ(grad.node.size(), n * a);
    ASSERT_EQ(grad.edge.size(), n * n * b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < b; ++k)
          EXPECT_EQ(grad.edge[(i * n + j) * b + k], grad.edge[(j * n + i) * b + k]);

    // Oracle: central differences of -loss on the relaxed input.
    GraphInputs in = make_inputs(g, kToySpace, t, T);
    auto neg_loss = [&](const Tensor &x, const Tensor &e) {
      ag::NoGradGuard guard;
      return -classifier_loss(cls.classify(ag::constant(x), ag::constant(e), in.aux),
                              1, loss).value().item();
    };
    const double h = 1e-5;
    auto fd = [&](bool node, std::size_t idx) {
      Tensor x = in.x.value(), e = in.e.value();
      Tensor &target = node ? x : e;
      target.data[idx] += h;
      const double up = neg_loss(x, e);
      target.data[idx] -= 2 * h;
      return (up - neg_loss(x, e)) / (2 * h);
    };
    auto rel = [](double p, double q) {
      return std::abs(p - q) / std::max({ std::abs(p), std::abs(q), 1e-3 });
    };
    for (std::size_t i = 0; i < grad.node.size(); ++i)
      EXPECT_LT(rel(fd(true, i), grad.node[i]), 1e-4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < b; ++k) {
          const double sym = 0.5 * (fd(false, (i * n + j) * b + k)
                                    + fd(false, (j * n + i) * b + k));
          EXPECT_LT(rel(sym, grad.edge[(i * n + j) * b + k]), 1e-4);
        }
  }
}

TEST(ClassifierGrad, LeavesParameterGradientsUntouched) {
  GraphTransformer cls(tiny_config(), kToySpace, ModelHead::kClassifier, 3);
  Rng rng(9);
  classifier_log_grad(cls, ClassifierLoss::kBce, random_toy_graph(3, rng), 2, 10, 1);
  for (const auto &[name, v]: cls.params().entries())
    for (double x: v.node()->grad.data)
      EXPECT_EQ(x, 0.0) << name;
}

TEST(ClassifierGrad, VanishesWhenSaturatedAtTarget) {
  GraphTransformer cls(tiny_config(), kToySpace, ModelHead::kClassifier, 3);
  cls.params().get("out_cls.1.b").node()->value.data[0] = 60.0;
  Rng rng(10);
  GraphGradient grad = classifier_log_grad(cls, ClassifierLoss::kBce,
                                           random_toy_graph(4, rng), 2, 10, 1);
  double max_abs = 0.0;
  for (auto *v: { &grad.node, &grad.edge })
    for (double x: *v)
      max_abs = std::max(max_abs, std::abs(x));
  EXPECT_LT(max_abs, 1e-20);
}

/// Balanced toy set with label 1 iff a double bond is present.
std::vector<LabeledGraph> double_bond_dataset(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<LabeledGraph> out;
  while (out.size() < count) {
    OneHotGraph g = random_toy_graph(4, rng);
    const int y = has_double(g) ? 1 : 0;
    const std::size_t have = std::count_if(out.begin(), out.end(),
                                           [&](auto &x) { return x.label == y; });
    if (have < count / 2)
      out.push_back({ g, y });
  }
  return out;
}

TEST(TrainClassifier, SeparatesAtLowNoiseAndIsChanceAtFullNoise) {
  const int T = 20;
  auto transitions = toy_transitions(T);
  auto train = double_bond_dataset(400, 1);
  auto heldout = double_bond_dataset(2000, 2);
  GraphTransformerConfig two_layers = tiny_config();
  two_layers.layers = 2;
  GraphTransformer cls(two_layers, kToySpace, ModelHead::kClassifier, 4);
  ClassifierTrainConfig cfg;
  cfg.steps = 1500;
  cfg.batch_size = 4;
  cfg.adam.learning_rate = 3e-3;
  train_classifier(cls, transitions, train, cfg, 11);
  const int ts[] = { 1, T };
  auto metrics = evaluate_by_timestep(cls, transitions, heldout, ts, 12);
  ASSERT_EQ(metrics.size(), 2u);
  EXPECT_GT(metrics[0].accuracy, 0.95);
  EXPECT_NEAR(metrics[1].auc, 0.5, 0.05);
}

TEST(TrainClassifier, DeterministicTrace) {
  auto transitions = toy_transitions(10);
  auto data = double_bond_dataset(20, 3);
  ClassifierTrainConfig cfg;
  cfg.steps = 10;
  cfg.batch_size = 2;
  cfg.loss = ClassifierLoss::kMse;
  GraphTransformer a(tiny_config(), kToySpace, ModelHead::kClassifier, 5);
  GraphTransformer b(tiny_config(), kToySpace, ModelHead::kClassifier, 5);
  EXPECT_EQ(train_classifier(a, transitions, data, cfg, 6),
            train_classifier(b, transitions, data, cfg, 6));
  GraphTransformer den(tiny_config(), kToySpace, ModelHead::kDenoiser, 5);
  EXPECT_THROW(train_classifier(den, transitions, data, cfg, 6), UsageError);
}

TEST(SampleGuided, ZeroLambdaIsBitwiseUnconditional) {
  auto transitions = toy_transitions(10);
  GraphTransformer den(tiny_config(), kToySpace, ModelHead::kDenoiser, 1);
  GraphTransformer cls(tiny_config(), kToySpace, ModelHead::kClassifier, 2);
  NeuralDenoiser denoiser(den);
  GuidanceConfig off;
  off.lambda = 0.0;
  ClassifierGuidance guidance(cls, ClassifierLoss::kBce, 10, off);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng r1(seed), r2(seed);
    EXPECT_EQ(sample_guided(denoiser, transitions, guidance, 4, r1),
              sample_reverse(denoiser, transitions, 4, r2));
  }
  GuidanceConfig on;
  on.lambda = 50.0;
  ClassifierGuidance active(cls, ClassifierLoss::kBce, 10, on);
  Rng r3(1);
  EXPECT_EQ(sample_guided(denoiser, transitions, active, 4, r3).size(), 4u);
  EXPECT_THROW(ClassifierGuidance(den, ClassifierLoss::kBce, 10, on), UsageError);
}

} // namespace
} // namespace molguide
