//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_CLI_METRICS_HPP_
#define MOLGUIDE_CLI_METRICS_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <string>

#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

struct GenerationMetrics {
  std::size_t total = 0;
  std::size_t valid_count = 0;
  std::size_t unique_count = 0;
  std::size_t novel_count = 0;
  /// valid_count / total.
  double valid = 0.0;
  /// unique_count / valid_count.
  double unique = 0.0;
  /// novel_count / unique_count.
  double novel = 0.0;
};

/// Canonical SMILES of a parseable, valence-valid input, else empty.
/// Canonical SMILES of the aromaticity-normalized graph, so Kekule and
/// aromatic spellings of one molecule agree. Throws DataError if g is
/// invalid.
std::string canonical_key(const MolecularGraph &g);

/// canonical_key() of the parsed SMILES, or empty if it is unparseable or
/// invalid.
std::string canonical_or_empty(const std::string &smiles);

/// training holds canonical SMILES. Ratios with a zero denominator are 0.
GenerationMetrics generation_metrics(std::span<const std::string> generated,
                                     const std::set<std::string> &training);

} // namespace molguide

#endif // MOLGUIDE_CLI_METRICS_HPP_
