//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_RINGS_HPP_
#define MOLGUIDE_MOLGRAPH_RINGS_HPP_

#include <cstddef>
#include <vector>

#include "molguide/molgraph/molecular_graph.hpp"
#include "molguide/molgraph/simple_graph.hpp"

namespace molguide {

struct RingInfo {
  /// Smallest set of smallest rings. Each ring lists atoms in cycle order,
  /// starting from its smallest index and continuing toward the smaller of
  /// that atom's two ring neighbors. Rings are sorted by (size, sorted atom
  /// tuple).
  std::vector<std::vector<std::size_t>> rings;
  std::vector<bool> atom_in_ring;
  /// n * n row-major flags.
  std::vector<bool> bond_in_ring_matrix;
  std::size_t n = 0;

  bool bond_in_ring(std::size_t i, std::size_t j) const {
    return bond_in_ring_matrix[i * n + j];
  }
  std::size_t ring_count() const noexcept { return rings.size(); }
  /// Size of the smallest SSSR ring containing atom i, or 0.
  std::size_t smallest_ring_size(std::size_t i) const;
  std::size_t largest_ring_size() const;
};

/// Edges - nodes + components.
std::size_t cycle_rank(const SimpleGraph &g);

/// Per-edge flag (by edge id) marking edges that lie on some cycle.
std::vector<bool> cyclic_edges(const SimpleGraph &g);

/// SSSR from the Horton candidate set (shortest-path cycles through every
/// vertex) reduced by GF(2) elimination. Among equal-length candidates the
/// lexicographically smallest sorted atom tuple wins.
RingInfo perceive_rings(const SimpleGraph &g);
RingInfo perceive_rings(const MolecularGraph &g);

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_RINGS_HPP_
