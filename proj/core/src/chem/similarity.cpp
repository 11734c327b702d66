//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/chem/similarity.hpp"

#include <algorithm>
#include <bit>

#include "molguide/common/error.hpp"
#include "molguide/common/parallel.hpp"

namespace molguide {

double tanimoto(const Fingerprint &a, const Fingerprint &b) {
  if (a.width() != b.width() || a.radius() != b.radius())
    throw UsageError("tanimoto: fingerprints differ in width or radius");
  std::size_t both = 0;
  auto wa = a.words(), wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k)
    both += static_cast<std::size_t>(std::popcount(wa[k] & wb[k]));
  const std::size_t either = a.popcount() + b.popcount() - both;
  if (either == 0)
    return 1.0;
  return static_cast<double>(both) / static_cast<double>(either);
}

double set_mol_sim(std::span<const Fingerprint> set, const Fingerprint &b) {
  if (set.empty())
    throw UsageError("set_mol_sim: empty reference set");
  double best = 0.0;
  for (const auto &a: set)
    best = std::max(best, tanimoto(a, b));
  return best;
}

std::vector<double> best_similarities(std::span<const Fingerprint> drugs,
                                      std::span<const Fingerprint> candidates,
                                      std::size_t workers) {
  if (drugs.empty())
    throw UsageError("best_similarities: empty reference set");
  std::vector<double> out(candidates.size());
  parallel_for(
      candidates.size(),
      [&](std::size_t i) { out[i] = set_mol_sim(drugs, candidates[i]); },
      workers);
  return out;
}

double drug_like(std::span<const Fingerprint> drugs,
                 std::span<const Fingerprint> candidates, double threshold,
                 std::size_t workers) {
  if (drugs.empty() || candidates.empty())
    throw UsageError("drug_like: empty input set");
  const auto sims = best_similarities(drugs, candidates, workers);
  const auto passing = std::count_if(sims.begin(), sims.end(),
                                     [&](double s) { return s > threshold; });
  return static_cast<double>(passing) / static_cast<double>(sims.size());
}

double drug_index(std::span<const Fingerprint> drugs,
                  std::span<const Fingerprint> training,
                  std::span<const Fingerprint> generated, double threshold,
                  std::size_t workers) {
  const double base = drug_like(drugs, training, threshold, workers);
  if (base == 0.0)
    throw NumericError("drug index undefined: no training molecule passes "
                       "the similarity threshold");
  return 100.0 * (drug_like(drugs, generated, threshold, workers) / base);
}

} // namespace molguide
