//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_SMILES_HPP_
#define MOLGUIDE_MOLGRAPH_SMILES_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "molguide/common/error.hpp"
#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

enum class SmilesErrorKind {
  kSyntax,
  kUnsupportedElement,
  kUnclosedRing,
  kUnbalancedParenthesis,
  kChargeOrIsotope,
  kStereo,
  kAromaticity,
  kHydrogenCount,
};

std::string_view smiles_error_kind_name(SmilesErrorKind kind) noexcept;

class SmilesError: public DataError {
public:
  SmilesError(SmilesErrorKind kind, std::size_t position,
              const std::string &message);

  SmilesErrorKind kind() const noexcept { return kind_; }
  /// Zero-based offset into the input.
  std::size_t position() const noexcept { return position_; }

private:
  SmilesErrorKind kind_;
  std::size_t position_;
};

/// Parses the supported SMILES subset: organic-subset atoms C N O S F Cl Br,
/// aromatic c n o s, bracket atoms of those elements with an optional
/// hydrogen count, bonds - = # :, branches, ring closures 1-9 and %nn, and
/// '.' between disconnected fragments. Charges, isotopes, stereo marks,
/// atom classes and wildcards are rejected.
///
/// Hydrogens are assigned when the molecule passes valence checks; otherwise
/// they stay unassigned and check_valence() reports the problem.
MolecularGraph parse_smiles(std::string_view text);

/// Canonical SMILES. Throws DataError if g fails check_valence().
std::string write_smiles(const MolecularGraph &g);

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_SMILES_HPP_
