//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_VALENCE_HPP_
#define MOLGUIDE_MOLGRAPH_VALENCE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "molguide/common/error.hpp"
#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

class KekulizeError: public DataError {
public:
  KekulizeError(const std::string &what, std::vector<std::size_t> atoms)
      : DataError(what), atoms_(std::move(atoms)) { }
  const std::vector<std::size_t> &atoms() const noexcept { return atoms_; }

private:
  std::vector<std::size_t> atoms_;
};

struct ValenceReport {
  bool valid = false;
  /// Atoms whose valence cannot be satisfied, ascending.
  std::vector<std::size_t> violations;
  /// Implicit hydrogens per atom; only meaningful when valid.
  std::vector<int> implicit_h;
};

/// Replaces aromatic bonds by an alternating single/double assignment found
/// by matching on the aromatic subgraph. The result carries the implicit
/// hydrogens implied by that assignment. Non-aromatic bonds are unchanged.
///
/// Aromatic atoms whose hydrogen count is already assigned are held to it;
/// otherwise aromatic carbon must take a double bond whenever it has a free
/// valence, and N/O/S take one only if that maximizes the matching.
///
/// Throws KekulizeError when no assignment exists.
MolecularGraph kekulize(const MolecularGraph &g);

/// Like kekulize() but reports failure as an empty optional.
std::optional<MolecularGraph> try_kekulize(const MolecularGraph &g);

/// Valence verdict. Aromatic systems are kekulized first; an atom is valid
/// when some allowed valence covers its bond-order sum. Aromatic rings with
/// fewer than five atoms are rejected even when they kekulize.
ValenceReport check_valence(const MolecularGraph &g);

/// Copy of g with implicit hydrogens assigned from check_valence(). Bonds
/// keep their aromatic form. Throws DataError if g is invalid.
MolecularGraph assign_hydrogens(const MolecularGraph &g);

/// One representation per molecule regardless of how its rings were written.
/// The graph is kekulized, then every SSSR ring whose atoms all contribute pi
/// electrons with a total of 4n+2 has its bonds marked aromatic. A ring atom
/// contributes 1 if it carries a double bond that is a ring bond, and 2 if it
/// is N, O or S with single bonds only. Hydrogens are assigned. Throws
/// DataError if g is invalid.
MolecularGraph normalize_aromaticity(const MolecularGraph &g);

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_VALENCE_HPP_
