//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "molguide/molgraph/canonical.hpp"
#include "molguide/molgraph/features.hpp"
#include "molguide/molgraph/rings.hpp"
#include "molguide/molgraph/smiles.hpp"
#include "molguide/molgraph/symmetric_eigen.hpp"
#include "molguide/molgraph/valence.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

namespace molguide {
namespace {
using testing::isomorphic;

std::vector<int> hydrogens(const MolecularGraph &g) {
  auto h = g.implicit_hydrogens();
  return { h.begin(), h.end() };
}

std::size_t count_bonds(const MolecularGraph &g, BondClass cls) {
  std::size_t c = 0;
  for (auto [i, j]: g.bond_list())
    c += g.bond(i, j) == cls;
  return c;
}

SmilesErrorKind parse_error(std::string_view text) {
  try {
    parse_smiles(text);
  } catch (const SmilesError &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return SmilesErrorKind::kSyntax;
}

TEST(Element, ValenceTable) {
  EXPECT_EQ(kAllElements.size(), 7u);
  auto s = allowed_valences(Element::kS);
  EXPECT_EQ(std::vector<int>(s.begin(), s.end()), (std::vector<int> { 2, 4, 6 }));
  EXPECT_EQ(smallest_valence_at_least(Element::kS, 3), 4);
  EXPECT_FALSE(smallest_valence_at_least(Element::kF, 2).has_value());
  EXPECT_EQ(element_from_symbol("Cl"), Element::kCl);
  EXPECT_FALSE(element_from_symbol("B").has_value());
}

TEST(MolecularGraph, BondsStaySymmetric) {
  MolecularGraph g({ Element::kC, Element::kO, Element::kN });
  g.set_bond(0, 1, BondClass::kDouble);
  g.set_bond(2, 0, BondClass::kSingle);
  g.set_bond(1, 0, BondClass::kSingle);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(g.bond(i, i), BondClass::kNone);
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(g.bond(i, j), g.bond(j, i));
  }
  EXPECT_THROW(g.set_bond(1, 1, BondClass::kSingle), std::exception);
}

TEST(Smiles, ParsesEthanol) {
  auto g = parse_smiles("CCO");
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.atom(0), Element::kC);
  EXPECT_EQ(g.atom(2), Element::kO);
  EXPECT_EQ(count_bonds(g, BondClass::kSingle), 2u);
  EXPECT_EQ(hydrogens(g), (std::vector<int> { 3, 2, 1 }));
}

TEST(Smiles, ParsesBenzene) {
  auto g = parse_smiles("c1ccccc1");
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(count_bonds(g, BondClass::kAromatic), 6u);
  EXPECT_EQ(g.bond_count(), 6u);
  auto rings = perceive_rings(g);
  ASSERT_EQ(rings.ring_count(), 1u);
  EXPECT_EQ(rings.rings[0].size(), 6u);
  EXPECT_EQ(hydrogens(g), std::vector<int>(6, 1));
}

TEST(Smiles, ParsesMethylcyclopropane) {
  auto g = parse_smiles("C1CC1C");
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.bond_count(), 4u);
  auto rings = perceive_rings(g);
  ASSERT_EQ(rings.ring_count(), 1u);
  EXPECT_EQ(rings.rings[0].size(), 3u);
  EXPECT_FALSE(rings.atom_in_ring[3]);
  EXPECT_EQ(hydrogens(g), (std::vector<int> { 2, 2, 1, 3 }));
}

TEST(Smiles, BracketAndMultiLetterAtoms) {
  auto g = parse_smiles("ClC(Br)[nH]1cccc1");
  EXPECT_EQ(g.atom(0), Element::kCl);
  EXPECT_EQ(g.atom(2), Element::kBr);
  auto pyrrole = parse_smiles("c1cc[nH]c1");
  EXPECT_EQ(pyrrole.implicit_h(3), 1);
  EXPECT_TRUE(check_valence(pyrrole).valid);
}

TEST(Smiles, RejectsUnsupportedInput) {
  EXPECT_EQ(parse_error("C[NH4+]"), SmilesErrorKind::kChargeOrIsotope);
  EXPECT_EQ(parse_error("[13C]"), SmilesErrorKind::kChargeOrIsotope);
  EXPECT_EQ(parse_error("F/C=C/F"), SmilesErrorKind::kStereo);
  EXPECT_EQ(parse_error("C[C@H](N)O"), SmilesErrorKind::kStereo);
  EXPECT_EQ(parse_error("C1CC"), SmilesErrorKind::kUnclosedRing);
  EXPECT_EQ(parse_error("CC(C"), SmilesErrorKind::kUnbalancedParenthesis);
  EXPECT_EQ(parse_error("CC)C"), SmilesErrorKind::kUnbalancedParenthesis);
  EXPECT_EQ(parse_error("CBC"), SmilesErrorKind::kUnsupportedElement);
  EXPECT_EQ(parse_error("C[Si]C"), SmilesErrorKind::kUnsupportedElement);
  EXPECT_EQ(parse_error("C*C"), SmilesErrorKind::kUnsupportedElement);
  EXPECT_EQ(parse_error("C==C"), SmilesErrorKind::kSyntax);
}

TEST(Smiles, ReportsErrorPosition) {
  try {
    parse_smiles("CCC?C");
    FAIL();
  } catch (const SmilesError &e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_EQ(e.error_class(), ErrorClass::kData);
  }
}

TEST(Smiles, PercentRingLabels) {
  auto a = parse_smiles("C%12CCCCC%12");
  auto b = parse_smiles("C1CCCCC1");
  EXPECT_TRUE(isomorphic(a, b));
}

TEST(Smiles, WriterIsOrderIndependent) {
  EXPECT_EQ(write_smiles(parse_smiles("OCC")), write_smiles(parse_smiles("CCO")));
  auto out = parse_smiles(write_smiles(parse_smiles("c1ccccc1")));
  EXPECT_EQ(out.size(), 6u);
  EXPECT_EQ(count_bonds(out, BondClass::kAromatic), 6u);
}

TEST(Smiles, WriterRejectsInvalidGraph) {
  MolecularGraph g({ Element::kC, Element::kC, Element::kC, Element::kC,
                     Element::kC, Element::kC });
  for (std::size_t i = 1; i < 6; ++i)
    g.set_bond(0, i, BondClass::kSingle);
  EXPECT_THROW(write_smiles(g), DataError);
}

TEST(Canonical, PathAtomsDistinct) {
  auto g = parse_smiles("OCC");
  auto ranks = canonical_ranks(g);
  EXPECT_NE(ranks[1], ranks[2]);
  std::set<std::size_t> unique(ranks.begin(), ranks.end());
  EXPECT_EQ(unique.size(), 3u);
}

TEST(Canonical, BenzeneRotations) {
  auto g = parse_smiles("c1ccccc1");
  const std::string ref = write_smiles(g);
  for (std::size_t r = 0; r < 6; ++r) {
    std::vector<std::size_t> rot(6);
    for (std::size_t i = 0; i < 6; ++i)
      rot[i] = (i + r) % 6;
    EXPECT_EQ(write_smiles(g.permuted(rot)), ref);
  }
}

TEST(Canonical, CuratedCorpusPermutationInvariant) {
  Rng rng(11);
  for (const auto &smi: testing::curated_smiles()) {
    auto g = parse_smiles(smi);
    const std::string ref = write_smiles(g);
    auto back = parse_smiles(ref);
    EXPECT_TRUE(isomorphic(g, back)) << smi << " -> " << ref;
    EXPECT_EQ(write_smiles(back), ref) << smi;
    for (int trial = 0; trial < 20; ++trial)
      ASSERT_EQ(write_smiles(g.permuted(testing::random_permutation(g.size(), rng))),
                ref)
          << smi;
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  EXPECT_NE(write_smiles(parse_smiles("CCCO")), write_smiles(parse_smiles("CC(C)O")));
  EXPECT_NE(write_smiles(parse_smiles("c1ccncc1")), write_smiles(parse_smiles("c1cccnc1C")));
  EXPECT_NE(write_smiles(parse_smiles("C1CC1.C1CC1")),
            write_smiles(parse_smiles("C1CCCCC1")));
}

TEST(Valence, Examples) {
  EXPECT_TRUE(check_valence(parse_smiles("C(C)(C)(C)C")).valid);

  MolecularGraph g(std::vector<Element>(6, Element::kC));
  for (std::size_t i = 1; i < 6; ++i)
    g.set_bond(0, i, BondClass::kSingle);
  auto report = check_valence(g);
  EXPECT_FALSE(report.valid);
  EXPECT_EQ(report.violations, std::vector<std::size_t> { 0 });

  auto co2 = parse_smiles("O=C=O");
  auto r2 = check_valence(co2);
  EXPECT_TRUE(r2.valid);
  EXPECT_EQ(r2.implicit_h, (std::vector<int> { 0, 0, 0 }));
}

TEST(Valence, HypervalentSulfur) {
  auto g = parse_smiles("CS(=O)(=O)C");
  EXPECT_TRUE(check_valence(g).valid);
  EXPECT_EQ(g.implicit_h(1), 0);
}

TEST(Kekulize, Benzene) {
  auto k = kekulize(parse_smiles("c1ccccc1"));
  EXPECT_EQ(count_bonds(k, BondClass::kSingle), 3u);
  EXPECT_EQ(count_bonds(k, BondClass::kDouble), 3u);
  EXPECT_EQ(count_bonds(k, BondClass::kAromatic), 0u);
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_EQ(k.bond_order_sum_x2(i), 6) << "double bonds must alternate";
}

TEST(Kekulize, Pyridine) {
  auto g = parse_smiles("c1ccncc1");
  auto k = kekulize(g);
  EXPECT_EQ(count_bonds(k, BondClass::kDouble), 3u);
  const std::size_t n_idx = 3;
  EXPECT_EQ(k.bond_order_sum_x2(n_idx), 6);
  EXPECT_TRUE(check_valence(g).valid);
  EXPECT_EQ(g.implicit_h(n_idx), 0);
}

TEST(Kekulize, FourRingKekulizesButIsRejected) {
  MolecularGraph g(std::vector<Element>(4, Element::kC));
  for (std::size_t i = 0; i < 4; ++i)
    g.set_bond(i, (i + 1) % 4, BondClass::kAromatic);
  auto k = kekulize(g);
  EXPECT_EQ(count_bonds(k, BondClass::kDouble), 2u);
  EXPECT_FALSE(check_valence(g).valid);
  EXPECT_EQ(parse_smiles("c1ccc1").hydrogens_assigned(), false);
}

TEST(Kekulize, AcyclicAromaticBondIsRejected) {
  // C=C:N as a decoded sample; kekulizable but not a ring.
  MolecularGraph g({ Element::kC, Element::kC, Element::kN });
  g.set_bond(0, 1, BondClass::kDouble);
  g.set_bond(1, 2, BondClass::kAromatic);
  EXPECT_TRUE(try_kekulize(g).has_value());
  EXPECT_FALSE(check_valence(g).valid);
  EXPECT_THROW(parse_smiles("C=cn"), SmilesError);
  EXPECT_TRUE(check_valence(parse_smiles("c1ccccc1-c1ccccc1")).valid);
}

TEST(Kekulize, FailsOnOddCarbonRing) {
  MolecularGraph g(std::vector<Element>(5, Element::kC));
  for (std::size_t i = 0; i < 5; ++i)
    g.set_bond(i, (i + 1) % 5, BondClass::kAromatic);
  EXPECT_THROW(kekulize(g), KekulizeError);
  EXPECT_FALSE(check_valence(g).valid);
}

TEST(Kekulize, FusedSystems) {
  for (const char *smi: { "c1ccc2ccccc2c1", "c1ccc2[nH]ccc2c1",
                          "Cn1cnc2c1c(=O)n(C)c(=O)n2C", "c1ncc2nc[nH]c2n1" }) {
    auto g = parse_smiles(smi);
    EXPECT_TRUE(check_valence(g).valid) << smi;
    EXPECT_TRUE(try_kekulize(g).has_value()) << smi;
  }
}

TEST(Rings, Examples) {
  EXPECT_EQ(perceive_rings(parse_smiles("C1CCCCC1")).rings,
            (std::vector<std::vector<std::size_t>> { { 0, 1, 2, 3, 4, 5 } }));
  auto naph = perceive_rings(parse_smiles("c1ccc2ccccc2c1"));
  ASSERT_EQ(naph.ring_count(), 2u);
  EXPECT_EQ(naph.rings[0].size(), 6u);
  EXPECT_EQ(naph.rings[1].size(), 6u);
  std::set<std::size_t> a(naph.rings[0].begin(), naph.rings[0].end());
  std::size_t shared = 0;
  for (std::size_t v: naph.rings[1])
    shared += a.count(v);
  EXPECT_EQ(shared, 2u);
  EXPECT_EQ(perceive_rings(parse_smiles("CCCC(C)O")).ring_count(), 0u);
}

TEST(Rings, CubaneSssr) {
  auto info = perceive_rings(parse_smiles("C12C3C4C1C5C2C3C45"));
  EXPECT_EQ(info.ring_count(), 5u);
  for (const auto &r: info.rings)
    EXPECT_EQ(r.size(), 4u);
}

TEST(Rings, PropertyRankAndSimpleCycles) {
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    auto g = testing::random_connected_graph(n, 0.15, rng);
    auto info = perceive_rings(g);
    ASSERT_EQ(info.ring_count(), cycle_rank(g));
    for (const auto &ring: info.rings) {
      std::set<std::size_t> distinct(ring.begin(), ring.end());
      ASSERT_EQ(distinct.size(), ring.size());
      for (std::size_t k = 0; k < ring.size(); ++k)
        ASSERT_TRUE(g.has_edge(ring[k], ring[(k + 1) % ring.size()]));
    }
    // Edge on some cycle iff flagged.
    auto cycles = testing::all_simple_cycles(g, n);
    std::set<std::pair<std::size_t, std::size_t>> on_cycle;
    for (const auto &c: cycles)
      for (std::size_t k = 0; k < c.size(); ++k)
        on_cycle.insert(std::minmax(c[k], c[(k + 1) % c.size()]));
    auto flags = cyclic_edges(g);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      ASSERT_EQ(flags[e], on_cycle.count(g.edges()[e]) == 1);
  }
}

TEST(Features, Triangle) {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  auto f = cycle_spectral_features(g, 0, 10);
  EXPECT_EQ(f.graph_cycle_totals, (CycleCounts { 1, 0, 0, 0 }));
  for (const auto &c: f.node_cycle_counts)
    EXPECT_EQ(c, (CycleCounts { 1, 0, 0, 0 }));
}

TEST(Features, PathSpectrum) {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto eig = symmetric_eigen(testing::laplacian(g), 3);
  EXPECT_NEAR(eig.values[0], 0.0, 1e-12);
  EXPECT_NEAR(eig.values[1], 1.0, 1e-12);
  EXPECT_NEAR(eig.values[2], 3.0, 1e-12);
  auto f = cycle_spectral_features(g, 5, 10);
  EXPECT_EQ(f.components, 1.0);
  EXPECT_NEAR(f.eigenvalues[0], 1.0, 1e-12);
  EXPECT_NEAR(f.eigenvalues[1], 3.0, 1e-12);
  EXPECT_EQ(f.eigenvalues[2], 0.0);
  EXPECT_DOUBLE_EQ(f.time_fraction, 0.5);
  // Fiedler vector (1, 0, -1) / sqrt(2).
  EXPECT_NEAR(f.fiedler_weight[0], 0.5, 1e-12);
  EXPECT_NEAR(f.fiedler_weight[1], 0.0, 1e-12);
  EXPECT_NEAR(f.fiedler_weight[2], 0.5, 1e-12);
}

TEST(Features, TwoDisjointEdges) {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  auto eig = symmetric_eigen(testing::laplacian(g), 4);
  EXPECT_NEAR(eig.values[0], 0.0, 1e-12);
  EXPECT_NEAR(eig.values[1], 0.0, 1e-12);
  auto f = cycle_spectral_features(g, 0, 1);
  EXPECT_EQ(f.components, 2.0);
  EXPECT_NEAR(f.eigenvalues[0], 2.0, 1e-12);
  EXPECT_NEAR(f.eigenvalues[1], 2.0, 1e-12);
}

TEST(Features, WidthsAndFiniteness) {
  auto f = cycle_spectral_features(parse_smiles("c1ccc2ccccc2c1"), 3, 7);
  EXPECT_EQ(f.global_vector().size(), AuxFeatures::kGlobalWidth);
  EXPECT_EQ(f.node_matrix().size(), 10 * AuxFeatures::kNodeWidth);
  for (double x: f.global_vector())
    EXPECT_TRUE(std::isfinite(x));
  EXPECT_TRUE(std::is_sorted(f.eigenvalues.begin(), f.eigenvalues.end()));
  EXPECT_EQ(f.graph_cycle_totals[3], 2.0);
}

TEST(Features, EigenResidualProperty) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(20);
    auto g = testing::random_connected_graph(n, 0.2, rng);
    auto l = testing::laplacian(g);
    auto eig = symmetric_eigen(l, n);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_GE(eig.values[k], -1e-9);
      auto v = eig.vector(k);
      for (std::size_t i = 0; i < n; ++i) {
        double lv = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          lv += l[i * n + j] * v[j];
        ASSERT_LT(std::abs(lv - eig.values[k] * v[i]), 1e-8);
      }
    }
  }
}

TEST(Features, CycleCountsMatchEnumeration) {
  // Every graph on up to 5 nodes, then random graphs up to 10 nodes.
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        pairs.emplace_back(i, j);
    for (std::size_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      SimpleGraph g(n);
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1)
          g.add_edge(pairs[e].first, pairs[e].second);
      ASSERT_EQ(count_cycles(g).per_node, testing::enumerated_cycle_counts(g));
    }
  }
  Rng rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    SimpleGraph g(n);
    const double p = rng.uniform();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.uniform() < p)
          g.add_edge(i, j);
    auto stats = count_cycles(g);
    auto expect = testing::enumerated_cycle_counts(g);
    ASSERT_EQ(stats.per_node, expect);
    for (std::size_t k = 0; k < 4; ++k) {
      double sum = 0.0;
      for (const auto &c: expect)
        sum += c[k];
      ASSERT_DOUBLE_EQ(stats.totals[k], sum / static_cast<double>(k + 3));
    }
  }
}

TEST(Features, CycleCountsMatchEnumerationAcrossWordBoundaries) {
  Rng rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 60 + rng.below(80);
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.uniform() < 0.05)
          g.add_edge(i, j);
    ASSERT_EQ(count_cycles(g).per_node, testing::enumerated_cycle_counts(g)) << n;
  }
}

TEST(Features, NodeFeaturesPermutationEquivariant) {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(11);
    auto g = testing::random_connected_graph(n, 0.25, rng);
    auto perm = testing::random_permutation(n, rng);
    SimpleGraph h(n);
    for (auto [i, j]: g.edges())
      h.add_edge(perm[i], perm[j]);
    auto fg = cycle_spectral_features(g, 1, 2);
    auto fh = cycle_spectral_features(h, 1, 2);
    for (std::size_t k = 0; k < AuxFeatures::kGlobalWidth; ++k)
      ASSERT_NEAR(fg.global_vector()[k], fh.global_vector()[k], 1e-9);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(fg.node_cycle_counts[i], fh.node_cycle_counts[perm[i]]);
      ASSERT_NEAR(fg.fiedler_weight[i], fh.fiedler_weight[perm[i]], 1e-9);
    }
  }
}

TEST(MolecularWeight, Benzene) {
  EXPECT_NEAR(parse_smiles("c1ccccc1").molecular_weight(), 78.1122, 1e-4);
  EXPECT_NEAR(parse_smiles("CCO").molecular_weight(),
              2 * 12.0107 + 15.9994 + 6 * 1.008, 1e-9);
}

TEST(Corpus, GeneratedMoleculesRoundTrip) {
  auto corpus = testing::generated_corpus(200, 99);
  Rng rng(1);
  for (const auto &g: corpus) {
    const std::string s = write_smiles(g);
    auto back = parse_smiles(s);
    ASSERT_TRUE(isomorphic(g, back)) << s;
    ASSERT_EQ(write_smiles(back), s);
    ASSERT_EQ(write_smiles(g.permuted(testing::random_permutation(g.size(), rng))), s);
  }
}

} // namespace
} // namespace molguide

namespace molguide {
namespace {

std::string normalized(const std::string &smi) {
  return canonicalize(normalize_aromaticity(parse_smiles(smi))).smiles;
}

TEST(Aromaticity, KekuleAndAromaticSpellingsAgree) {
  const std::vector<std::pair<const char *, const char *>> pairs {
    { "c1ccccc1", "C1=CC=CC=C1" },
    { "c1ccc2ccccc2c1", "C1=CC=C2C=CC=CC2=C1" },
    { "c1ccc2ccccc2c1", "C1=CC2=CC=CC=C2C=C1" },
    { "c1ccncc1", "C1=CC=NC=C1" },
    { "c1cc[nH]c1", "C1=CC=CN1" },
    { "c1ccoc1", "C1=COC=C1" },
    { "c1ccsc1", "C1=CSC=C1" },
    { "Cn1cccc1", "CN1C=CC=C1" },
    { "c1ccc2[nH]ccc2c1", "C1=CC=C2C(=C1)C=CN2" },
    { "Oc1ccccc1C(=O)O", "OC1=CC=CC=C1C(O)=O" },
  };
  for (const auto &[aromatic, kekule]: pairs) {
    EXPECT_EQ(normalized(aromatic), normalized(kekule)) << aromatic << " / " << kekule;
    EXPECT_EQ(normalized(aromatic), canonicalize(parse_smiles(aromatic)).smiles)
        << aromatic;
  }
}

TEST(Aromaticity, NonHuckelRingsStayKekule) {
  EXPECT_EQ(normalized("c1ccccccc1"), normalized("C1=CC=CC=CC=C1"));
  EXPECT_EQ(normalized("C1=CC=CC=CC=C1").find('c'), std::string::npos);
  EXPECT_EQ(normalized("C1=CCCCC1").find('c'), std::string::npos);
  EXPECT_EQ(normalized("O=C1C=CC(=O)C=C1").find('c'), std::string::npos);
}

TEST(Aromaticity, IdempotentAndRelabelingInvariant) {
  Rng rng(23);
  std::vector<MolecularGraph> corpus = testing::generated_corpus(300, 4);
  for (const std::string &s: testing::curated_smiles())
    corpus.push_back(parse_smiles(s));
  for (const MolecularGraph &g: corpus) {
    const MolecularGraph a = normalize_aromaticity(g);
    ASSERT_TRUE(check_valence(a).valid) << write_smiles(g);
    EXPECT_EQ(normalize_aromaticity(a), a) << write_smiles(g);
    EXPECT_EQ(normalize_aromaticity(kekulize(g)), a) << write_smiles(g);
    const auto perm = testing::random_permutation(g.size(), rng);
    EXPECT_EQ(canonicalize(normalize_aromaticity(g.permuted(perm))).smiles,
              canonicalize(a).smiles)
        << write_smiles(g);
  }
}

} // namespace
} // namespace molguide
