//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_CANONICAL_HPP_
#define MOLGUIDE_MOLGRAPH_CANONICAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

struct CanonicalForm {
  /// ranks[i] is the canonical position of atom i; a permutation of 0..n-1.
  std::vector<std::size_t> ranks;
  std::string smiles;
};

/// Canonical labeling of a valid graph. Atom invariants are refined
/// iteratively over neighbor ranks; remaining ties are split one class at a
/// time, exploring every member of the split class and keeping the labeling
/// with the lexicographically smallest SMILES.
CanonicalForm canonicalize(const MolecularGraph &g);

std::vector<std::size_t> canonical_ranks(const MolecularGraph &g);

/// Order-invariant refinement classes without tie breaking: atoms with equal
/// values are indistinguishable by iterated neighborhood invariants.
std::vector<std::size_t> refined_classes(const MolecularGraph &g);

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_CANONICAL_HPP_
