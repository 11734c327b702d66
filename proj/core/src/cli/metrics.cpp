//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/cli/metrics.hpp"

#include "molguide/common/error.hpp"
#include "molguide/molgraph/canonical.hpp"
#include "molguide/molgraph/smiles.hpp"
#include "molguide/molgraph/valence.hpp"

namespace molguide {

std::string canonical_key(const MolecularGraph &g) {
  return canonicalize(normalize_aromaticity(g)).smiles;
}

std::string canonical_or_empty(const std::string &smiles) {
  try {
    MolecularGraph g = parse_smiles(smiles);
    if (g.empty() || !check_valence(g).valid)
      return {};
    return canonical_key(g);
  } catch (const DataError &) {
    return {};
  }
}

GenerationMetrics generation_metrics(std::span<const std::string> generated,
                                     const std::set<std::string> &training) {
  GenerationMetrics m;
  m.total = generated.size();
  std::set<std::string> distinct;
  for (const std::string &s: generated) {
    std::string c = canonical_or_empty(s);
    if (c.empty())
      continue;
    ++m.valid_count;
    distinct.insert(std::move(c));
  }
  m.unique_count = distinct.size();
  for (const std::string &c: distinct)
    m.novel_count += training.count(c) == 0;
  auto ratio = [](std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  m.valid = ratio(m.valid_count, m.total);
  m.unique = ratio(m.unique_count, m.valid_count);
  m.novel = ratio(m.novel_count, m.unique_count);
  return m;
}

} // namespace molguide
