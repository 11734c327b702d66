//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <benchmark/benchmark.h>

#include "molguide/chem/fingerprint.hpp"
#include "molguide/chem/similarity.hpp"
#include "molguide/common/rng.hpp"
#include "molguide/molgraph/canonical.hpp"
#include "molguide/molgraph/smiles.hpp"
#include "molguide/molgraph/valence.hpp"

namespace {

using namespace molguide;

const std::vector<std::string> &drug_smiles() {
  static const std::vector<std::string> smiles {
    "CC(=O)Oc1ccccc1C(=O)O",
    "CC(C)Cc1ccc(cc1)C(C)C(=O)O",
    "Cn1cnc2c1c(=O)n(C)c(=O)n2C",
    "CN1CCCC1c1cccnc1",
    "CN1C(=O)CN=C(c2ccccc2)c2cc(Cl)ccc21",
    "OC(=O)CCCc1ccc(N(CCCl)CCCl)cc1",
    "Nc1nc(=O)n(cc1)C1CSC(CO)O1",
    "CC12CCC3c4ccc(O)cc4CCC3C1CCC2O",
  };
  return smiles;
}

std::vector<MolecularGraph> molecules() {
  std::vector<MolecularGraph> out;
  for (const std::string &s: drug_smiles())
    out.push_back(parse_smiles(s));
  return out;
}

void BM_ParseSmiles(benchmark::State &state) {
  const auto &smiles = drug_smiles();
  for (auto _: state)
    for (const std::string &s: smiles)
      benchmark::DoNotOptimize(parse_smiles(s));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(smiles.size()));
}

void BM_Canonicalize(benchmark::State &state) {
  const auto mols = molecules();
  for (auto _: state)
    for (const MolecularGraph &g: mols)
      benchmark::DoNotOptimize(canonicalize(normalize_aromaticity(g)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mols.size()));
}

void BM_MorganFingerprint(benchmark::State &state) {
  const auto mols = molecules();
  const int radius = static_cast<int>(state.range(0));
  for (auto _: state)
    for (const MolecularGraph &g: mols)
      benchmark::DoNotOptimize(morgan_fingerprint(g, radius, kScreeningWidth));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mols.size()));
}

// Random dense-ish fingerprints stand in for a large screening library.
std::vector<Fingerprint> random_fingerprints(std::size_t count, Rng &rng) {
  std::vector<Fingerprint> out;
  for (std::size_t i = 0; i < count; ++i) {
    Fingerprint fp(kScreeningWidth, kScreeningRadius);
    for (int b = 0; b < 40; ++b)
      fp.set(rng.below(kScreeningWidth));
    out.push_back(std::move(fp));
  }
  return out;
}

void BM_DrugLike(benchmark::State &state) {
  Rng rng(1);
  const auto drugs = random_fingerprints(static_cast<std::size_t>(state.range(0)), rng);
  const auto candidates = random_fingerprints(1000, rng);
  for (auto _: state)
    benchmark::DoNotOptimize(drug_like(drugs, candidates, kDrugLikeThreshold, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 1000);
}

BENCHMARK(BM_ParseSmiles);
BENCHMARK(BM_Canonicalize);
BENCHMARK(BM_MorganFingerprint)->Arg(2)->Arg(3);
BENCHMARK(BM_DrugLike)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
