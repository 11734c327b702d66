//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_MOLECULAR_GRAPH_HPP_
#define MOLGUIDE_MOLGRAPH_MOLECULAR_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "molguide/molgraph/bond.hpp"
#include "molguide/molgraph/element.hpp"

namespace molguide {

/// Heavy-atom molecular graph: element list plus a dense symmetric bond
/// matrix. Implicit hydrogen counts are -1 until assigned by valence
/// handling (see assign_hydrogens()).
class MolecularGraph {
public:
  static constexpr int kUnassigned = -1;

  MolecularGraph() = default;

  explicit MolecularGraph(std::vector<Element> atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  Element atom(std::size_t i) const { return atoms_[i]; }
  std::span<const Element> atoms() const noexcept { return atoms_; }

  BondClass bond(std::size_t i, std::size_t j) const {
    return bonds_[i * size() + j];
  }

  /// Sets bond (i, j) and (j, i). Throws std::invalid_argument for i == j or
  /// out-of-range indices.
  void set_bond(std::size_t i, std::size_t j, BondClass b);

  std::size_t add_atom(Element e);

  int implicit_h(std::size_t i) const { return implicit_h_[i]; }
  std::span<const int> implicit_hydrogens() const noexcept {
    return implicit_h_;
  }
  void set_implicit_h(std::size_t i, int h) { implicit_h_[i] = h; }
  void clear_hydrogens();
  bool hydrogens_assigned() const noexcept;

  std::size_t degree(std::size_t i) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  /// Number of bonds of class != kNone (each unordered pair once).
  std::size_t bond_count() const;
  /// Unordered pairs (i < j) carrying a bond, in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> bond_list() const;

  /// True if the atom carries at least one aromatic bond.
  bool is_aromatic_atom(std::size_t i) const;

  /// Twice the sum of bond orders at atom i.
  int bond_order_sum_x2(std::size_t i) const;

  /// Graph with atom i moved to index new_index[i].
  MolecularGraph permuted(std::span<const std::size_t> new_index) const;

  /// Sum of element masses plus implicit hydrogens. Requires assigned
  /// hydrogens.
  double molecular_weight() const;

  friend bool operator==(const MolecularGraph &,
                         const MolecularGraph &) = default;

private:
  std::vector<Element> atoms_;
  std::vector<BondClass> bonds_;
  std::vector<int> implicit_h_;
};

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_MOLECULAR_GRAPH_HPP_
