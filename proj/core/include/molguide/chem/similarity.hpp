//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_CHEM_SIMILARITY_HPP_
#define MOLGUIDE_CHEM_SIMILARITY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "molguide/chem/fingerprint.hpp"

namespace molguide {

/// |a & b| / |a | b|; 1.0 when both are empty. Throws UsageError on a
/// width or radius mismatch.
double tanimoto(const Fingerprint &a, const Fingerprint &b);

/// Largest tanimoto(a, b) over a in set. Throws UsageError if set is empty.
double set_mol_sim(std::span<const Fingerprint> set, const Fingerprint &b);

/// set_mol_sim(drugs, c) for every candidate c.
std::vector<double> best_similarities(std::span<const Fingerprint> drugs,
                                      std::span<const Fingerprint> candidates,
                                      std::size_t workers = 0);

inline constexpr double kDrugLikeThreshold = 0.5;

/// Fraction of candidates whose set_mol_sim against drugs is strictly above
/// threshold.
double drug_like(std::span<const Fingerprint> drugs,
                 std::span<const Fingerprint> candidates,
                 double threshold = kDrugLikeThreshold,
                 std::size_t workers = 0);

/// 100 * drug_like(drugs, generated) / drug_like(drugs, training). Throws
/// NumericError when the training proportion is zero.
double drug_index(std::span<const Fingerprint> drugs,
                  std::span<const Fingerprint> training,
                  std::span<const Fingerprint> generated,
                  double threshold = kDrugLikeThreshold,
                  std::size_t workers = 0);

} // namespace molguide

#endif // MOLGUIDE_CHEM_SIMILARITY_HPP_
