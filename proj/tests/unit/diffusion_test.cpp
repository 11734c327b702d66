//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "molguide/common/error.hpp"
#include "molguide/diffusion/sampler.hpp"
#include "molguide/diffusion/schedule.hpp"
#include "molguide/diffusion/transitions.hpp"
#include "molguide/molgraph/smiles.hpp"

#include "chain_oracle.hpp"

namespace molguide {
namespace {

double tv(std::span<const double> p, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

std::vector<double> random_simplex(std::size_t k, Rng &rng, double floor = 0.05) {
  std::vector<double> p(k);
  double s = 0.0;
  for (auto &x: p)
    s += x = floor + rng.uniform();
  for (auto &x: p)
    x /= s;
  return p;
}

std::vector<double> step_alphas(const NoiseSchedule &s) {
  return { s.alpha.begin() + 1, s.alpha.end() };
}

TEST(Schedule, CosineInvariants) {
  for (int T: { 1, 2, 10, 50, 500, 1000 }) {
    auto s = NoiseSchedule::cosine(T);
    ASSERT_EQ(s.alpha_bar.size(), static_cast<std::size_t>(T) + 1);
    EXPECT_EQ(s.alpha_bar[0], 1.0);
    EXPECT_LT(s.alpha_bar[T], 1e-4);
    double prod = 1.0;
    for (int t = 1; t <= T; ++t) {
      EXPECT_LT(s.alpha_bar[t], s.alpha_bar[t - 1]);
      EXPECT_GT(s.alpha[t], 0.0);
      EXPECT_LE(s.alpha[t], 1.0);
      prod *= s.alpha[t];
      EXPECT_NEAR(prod, s.alpha_bar[t], 1e-12);
    }
  }
  EXPECT_THROW(NoiseSchedule::cosine(0), UsageError);
}

TEST(Transitions, Examples) {
  auto sch = NoiseSchedule::from_alphas({ 1.0, 0.0, 0.5 });
  CategoricalChain chain(sch, { 0.2, 0.3, 0.5 });
  auto q1 = chain.q(1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(q1[i * 3 + j], i == j ? 1.0 : 0.0);
  auto q2 = chain.q(2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_DOUBLE_EQ(q2[i * 3 + j], chain.marginal()[j]);

  CategoricalChain two(NoiseSchedule::from_alphas({ 0.5 }), { 0.5, 0.5 });
  auto q = two.q(1);
  EXPECT_DOUBLE_EQ(q[0], 0.75);
  EXPECT_DOUBLE_EQ(q[1], 0.25);
  EXPECT_DOUBLE_EQ(q[2], 0.25);
  EXPECT_DOUBLE_EQ(q[3], 0.75);

  EXPECT_THROW(CategoricalChain(sch, { 0.5, 0.6 }), UsageError);
  EXPECT_THROW(CategoricalChain(sch, { 1.5, -0.5 }), UsageError);
}

TEST(Transitions, StochasticAndCumulative) {
  Rng rng(1);
  for (std::size_t k: { 2u, 5u, 7u }) {
    auto m = random_simplex(k, rng);
    auto sch = NoiseSchedule::cosine(500);
    CategoricalChain c(sch, m);
    for (int t = 1; t <= 500; ++t) {
      auto q = c.q(t), qb = c.q_bar(t), prev = c.q_bar(t - 1);
      for (std::size_t i = 0; i < k; ++i) {
        double rq = 0.0, rqb = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
          rq += q[i * k + j];
          rqb += qb[i * k + j];
          double prod = 0.0;
          for (std::size_t l = 0; l < k; ++l)
            prod += prev[i * k + l] * q[l * k + j];
          ASSERT_LT(std::abs(prod - qb[i * k + j]), 1e-10);
          // Closed form of the marginal chain.
          const double closed = (i == j ? sch.alpha_bar[t] : 0.0)
                                + (1.0 - sch.alpha_bar[t]) * m[j];
          ASSERT_NEAR(qb[i * k + j], closed, 1e-10);
        }
        ASSERT_NEAR(rq, 1.0, 1e-12);
        ASSERT_NEAR(rqb, 1.0, 1e-12);
      }
    }
    auto last = c.q_bar(500);
    for (std::size_t i = 0; i < k; ++i)
      EXPECT_LT(tv(last.subspan(i * k, k), m), 1e-3);
  }
}

TEST(Marginals, Examples) {
  std::vector<MolecularGraph> one { parse_smiles("CC") };
  auto m = estimate_marginals(one, 2);
  EXPECT_EQ(m.node[0], 1.0);
  EXPECT_EQ(m.edge[1], 1.0);
  EXPECT_EQ(m.edge[0], 0.0);

  std::vector<MolecularGraph> cco { parse_smiles("CCO") };
  auto m2 = estimate_marginals(cco, 3);
  EXPECT_DOUBLE_EQ(m2.node[0], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m2.node[2], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(m2.edge[0], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(m2.edge[1], 2.0 / 3.0);

  // Padding: "CC" inside a 3-node frame adds two absent pairs.
  auto m3 = estimate_marginals(one, 3);
  EXPECT_DOUBLE_EQ(m3.edge[0], 2.0 / 3.0);

  EXPECT_THROW(estimate_marginals(std::vector<MolecularGraph> {}), DataError);
  EXPECT_THROW(estimate_marginals(cco, 2), DataError);
}

TEST(Posterior, FrozenChain) {
  CategoricalChain c(NoiseSchedule::from_alphas({ 1.0, 1.0 }), { 0.5, 0.5 });
  auto p = c.posterior_term(1, 1, 2);
  EXPECT_EQ(p, (std::vector<double> { 0.0, 1.0 }));
  EXPECT_THROW(c.posterior_term(0, 1, 2), NumericError);
  EXPECT_THROW(c.posterior_term(0, 1, 1), UsageError);
}

TEST(Posterior, TwoClassHandExample) {
  // alpha^2 = 0.5 and alpha_bar^1 = 0.7.
  std::vector<double> alphas { 0.7, 0.5 };
  std::vector<double> m { 0.5, 0.5 };
  CategoricalChain c(NoiseSchedule::from_alphas(alphas), m);
  for (int xt = 0; xt < 2; ++xt)
    for (int x0 = 0; x0 < 2; ++x0) {
      auto got = c.posterior_term(xt, x0, 2);
      auto want = testing::bayes_posterior(alphas, m, xt, x0, 2);
      for (std::size_t j = 0; j < 2; ++j)
        EXPECT_NEAR(got[j], want[j], 1e-12);
    }
  // x_t = 0, x0 = 0: weights (0.75 * 0.85, 0.25 * 0.15).
  auto p = c.posterior_term(0, 0, 2);
  EXPECT_NEAR(p[0], 0.6375 / (0.6375 + 0.0375), 1e-15);
}

TEST(Posterior, MatchesPathEnumeration) {
  Rng rng(4);
  for (std::size_t k: { 2u, 3u, 4u }) {
    auto m = random_simplex(k, rng);
    for (int T: { 2, 6 }) {
      auto sch = NoiseSchedule::cosine(T);
      CategoricalChain c(sch, m);
      for (int t = 2; t <= T; ++t)
        for (int xt = 0; xt < static_cast<int>(k); ++xt)
          for (int x0 = 0; x0 < static_cast<int>(k); ++x0) {
            auto got = c.posterior_term(xt, x0, t);
            auto want = testing::bayes_posterior(step_alphas(sch), m, xt, x0, t);
            double s = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
              ASSERT_NEAR(got[j], want[j], 1e-10);
              s += got[j];
            }
            ASSERT_NEAR(s, 1.0, 1e-12);
          }
    }
  }
}

TEST(Denoising, MixtureIdentities) {
  Rng rng(9);
  auto sch = NoiseSchedule::cosine(10);
  CategoricalChain c(sch, { 0.2, 0.5, 0.3 });
  for (int t = 2; t <= 10; ++t) {
    for (int xt = 0; xt < 3; ++xt) {
      auto point = c.denoising_distribution(std::vector<double> { 0, 1, 0 }, xt, t);
      auto term = c.posterior_term(xt, 1, t);
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_NEAR(point[j], term[j], 1e-15);

      auto half = c.denoising_distribution(std::vector<double> { 0.5, 0.5, 0 }, xt, t);
      auto t0 = c.posterior_term(xt, 0, t);
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_NEAR(half[j], 0.5 * (t0[j] + term[j]), 1e-15);

      auto pred = random_simplex(3, rng, 0.0);
      auto mix = c.denoising_distribution(pred, xt, t);
      std::vector<double> want(3, 0.0);
      for (int x = 0; x < 3; ++x) {
        auto b = testing::bayes_posterior(step_alphas(sch), { 0.2, 0.5, 0.3 }, xt, x, t);
        for (std::size_t j = 0; j < 3; ++j)
          want[j] += pred[x] * b[j];
      }
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_NEAR(mix[j], want[j], 1e-12);
    }
  }
  EXPECT_THROW(c.denoising_distribution(std::vector<double> { 0.5, 0.2, 0.2 }, 0, 3),
               UsageError);
}

TEST(Denoising, DropsUnreachableHypotheses) {
  // Class 2 has zero marginal mass, so x_t = 2 is reachable only from x0 = 2.
  CategoricalChain c(NoiseSchedule::cosine(5), { 0.5, 0.5, 0.0 });
  auto d = c.denoising_distribution(std::vector<double> { 0.5, 0.25, 0.25 }, 2, 3);
  EXPECT_EQ(d, c.posterior_term(2, 2, 3));
  EXPECT_THROW(c.denoising_distribution(std::vector<double> { 0.5, 0.5, 0.0 }, 2, 3),
               NumericError);
}

TransitionModel toy_model(int T, std::vector<double> node_m,
                          std::vector<double> edge_m) {
  return build_transitions(NoiseSchedule::cosine(T), { node_m, edge_m });
}

TEST(Noise, IdentityWhenRetained) {
  auto model = build_transitions(NoiseSchedule::from_alphas({ 1.0, 1.0 }),
                                 { { 0.5, 0.5 }, { 0.3, 0.3, 0.4 } });
  Rng rng(3);
  OneHotGraph g(4);
  g.set_node(1, 1);
  g.set_edge(0, 2, 2);
  g.set_edge(1, 3, 1);
  EXPECT_EQ(noise_graph(model, g, 2, rng), g);
  EXPECT_THROW(noise_graph(model, g, 3, rng), UsageError);
  EXPECT_THROW(noise_graph(model, g, 0, rng), UsageError);
}

TEST(Noise, FullNoiseReachesMarginal) {
  auto model = toy_model(500, { 0.1, 0.6, 0.3 }, { 0.7, 0.2, 0.1 });
  Rng rng(12);
  OneHotGraph g0(2);
  g0.set_edge(0, 1, 2);
  std::vector<double> nodes(3, 0.0), edges(3, 0.0);
  const int N = 100000;
  for (int s = 0; s < N; ++s) {
    auto g = noise_graph(model, g0, 500, rng);
    ASSERT_EQ(g.edge(0, 1), g.edge(1, 0));
    ASSERT_EQ(g.edge(0, 0), 0);
    nodes[g.node(0)] += 1.0 / N;
    edges[g.edge(0, 1)] += 1.0 / N;
  }
  EXPECT_LT(tv(nodes, model.marginals.node), 0.02);
  EXPECT_LT(tv(edges, model.marginals.edge), 0.02);
}

TEST(Prior, Frequencies) {
  auto model = toy_model(10, { 0.25, 0.75 }, { 0.5, 0.1, 0.4 });
  Rng rng(2);
  std::vector<double> nodes(2, 0.0), edges(3, 0.0);
  const int N = 100000;
  for (int s = 0; s < N; ++s) {
    auto g = sample_prior(model, 2, rng);
    nodes[g.node(1)] += 1.0 / N;
    edges[g.edge(0, 1)] += 1.0 / N;
  }
  EXPECT_LT(tv(nodes, model.marginals.node), 0.01);
  EXPECT_LT(tv(edges, model.marginals.edge), 0.01);

  auto point = toy_model(10, { 0, 1 }, { 0, 0, 1 });
  auto g = sample_prior(point, 5, rng);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(g.node(i), 1);
    for (std::size_t j = 0; j < 5; ++j)
      EXPECT_EQ(g.edge(i, j), i == j ? 0 : 2);
  }
}

class ConstantDenoiser: public Denoiser {
public:
  ConstantDenoiser(std::vector<double> node, std::vector<double> edge)
      : node_(std::move(node)), edge_(std::move(edge)) { }

  ElementDistributions predict(const OneHotGraph &g, int, int) const override {
    ElementDistributions d(g.size(), node_.size(), edge_.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::copy(node_.begin(), node_.end(), d.node_row(i).begin());
      for (std::size_t j = 0; j < g.size(); ++j)
        std::copy(edge_.begin(), edge_.end(), d.edge_row(i, j).begin());
    }
    return d;
  }

private:
  std::vector<double> node_, edge_;
};

TEST(Sampler, FinalStepFollowsPrediction) {
  auto model = toy_model(20, { 0.5, 0.5 }, { 0.5, 0.5 });
  ConstantDenoiser den({ 0.8, 0.2 }, { 0.1, 0.9 });
  Rng rng(21);
  std::vector<double> nodes(2, 0.0), edges(2, 0.0);
  const int N = 20000;
  for (int s = 0; s < N; ++s) {
    auto g = sample_reverse(den, model, 2, rng);
    ASSERT_EQ(g.edge(0, 1), g.edge(1, 0));
    nodes[g.node(0)] += 1.0 / N;
    edges[g.edge(0, 1)] += 1.0 / N;
  }
  EXPECT_LT(tv(nodes, std::vector<double> { 0.8, 0.2 }), 0.02);
  EXPECT_LT(tv(edges, std::vector<double> { 0.1, 0.9 }), 0.02);
}

TEST(Sampler, SingleStepChain) {
  auto model = toy_model(1, { 0.3, 0.7 }, { 0.6, 0.4 });
  ConstantDenoiser den({ 0.9, 0.1 }, { 0.2, 0.8 });
  Rng a(5), b(5);
  auto g = sample_reverse(den, model, 3, a);
  sample_prior(model, 3, b);
  OneHotGraph manual(3);
  for (std::size_t i = 0; i < 3; ++i)
    manual.set_node(i, static_cast<int>(b.categorical(std::vector<double> { 0.9, 0.1 })));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      manual.set_edge(i, j, static_cast<int>(b.categorical(std::vector<double> { 0.2, 0.8 })));
  EXPECT_EQ(g, manual);
}

TEST(Sampler, UniformPredictionMatchesChainStatistics) {
  // One node: the state before the final step follows the chain propagated
  // from the marginal with uniform predictions. Check that intermediate law
  // with a hook that records G^1 frequencies.
  const int T = 4;
  auto model = toy_model(T, { 0.2, 0.8 }, { 1.0, 0.0 });
  ConstantDenoiser den({ 0.5, 0.5 }, { 1.0, 0.0 });

  std::vector<double> law(model.marginals.node);
  for (int t = T; t >= 2; --t) {
    std::vector<double> next(2, 0.0);
    for (int xt = 0; xt < 2; ++xt) {
      auto d = model.nodes.denoising_distribution(std::vector<double> { 0.5, 0.5 }, xt, t);
      for (std::size_t j = 0; j < 2; ++j)
        next[j] += law[xt] * d[j];
    }
    law = next;
  }

  struct Recorder: StepHook {
    mutable std::vector<double> counts = std::vector<double>(2, 0.0);
    void adjust(const OneHotGraph &g, int t, ElementDistributions &) const override {
      if (t == 1)
        counts[g.node(0)] += 1.0;
    }
  } rec;
  Rng rng(6);
  const int N = 50000;
  for (int s = 0; s < N; ++s)
    sample_reverse(den, model, 1, rng, &rec);
  for (auto &c: rec.counts)
    c /= N;
  EXPECT_LT(tv(rec.counts, law), 0.01);
}

TEST(Sampler, BatchIndependentOfWorkers) {
  auto model = toy_model(10, { 0.5, 0.5 }, { 0.5, 0.5 });
  ConstantDenoiser den({ 0.3, 0.7 }, { 0.6, 0.4 });
  NodeCountDistribution sizes({ 0, 1, 2, 3 });
  auto a = sample_batch(den, model, sizes, 50, 77, nullptr, 1);
  auto b = sample_batch(den, model, sizes, 50, 77, nullptr, 3);
  EXPECT_EQ(a, b);
  for (const auto &g: a)
    EXPECT_GE(g.size(), 1u);
  EXPECT_THROW(NodeCountDistribution({ 1.0, 0.0 }), UsageError);
  EXPECT_THROW(NodeCountDistribution(std::vector<double> {}), UsageError);
}

TEST(OneHot, MoleculeRoundTrip) {
  auto g = parse_smiles("c1ccncc1C(=O)Cl");
  auto oh = OneHotGraph::from_molecule(g);
  oh.validate(StateSpace::molecules());
  auto back = oh.to_molecule();
  EXPECT_EQ(back.atoms().size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      EXPECT_EQ(back.bond(i, j), g.bond(i, j));
  auto hot = oh.edge_one_hot(5);
  EXPECT_EQ(hot.size(), g.size() * g.size() * 5);
  EXPECT_EQ(hot[0], 1.0);
}

} // namespace
} // namespace molguide
