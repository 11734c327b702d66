//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_DIFFUSION_STATE_HPP_
#define MOLGUIDE_DIFFUSION_STATE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "molguide/molgraph/bond.hpp"
#include "molguide/molgraph/element.hpp"
#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

struct StateSpace {
  std::size_t atom_classes = kAllElements.size();
  /// Edge class 0 is always "no edge".
  std::size_t edge_classes = kBondClassCount;

  static constexpr StateSpace molecules() noexcept { return {}; }
  bool is_molecular() const noexcept { return *this == molecules(); }

  friend constexpr bool operator==(const StateSpace &,
                                   const StateSpace &) = default;
};

/// Graph state as class indices per node and per node pair. The edge matrix
/// is symmetric with class 0 on the diagonal.
class OneHotGraph {
public:
  OneHotGraph() = default;
  explicit OneHotGraph(std::size_t n): nodes_(n, 0), edges_(n * n, 0) { }

  std::size_t size() const noexcept { return nodes_.size(); }

  int node(std::size_t i) const { return nodes_[i]; }
  void set_node(std::size_t i, int c) { nodes_[i] = c; }
  int edge(std::size_t i, std::size_t j) const {
    return edges_[i * size() + j];
  }
  /// Writes both (i, j) and (j, i). Throws on i == j.
  void set_edge(std::size_t i, std::size_t j, int c);

  std::span<const int> nodes() const noexcept { return nodes_; }
  /// n * n row-major.
  std::span<const int> edges() const noexcept { return edges_; }

  /// n * classes row-major one-hot rows.
  std::vector<double> node_one_hot(std::size_t classes) const;
  /// n * n * classes one-hot; the diagonal carries class 0.
  std::vector<double> edge_one_hot(std::size_t classes) const;

  /// Throws DataError if a class index falls outside the space.
  void validate(const StateSpace &space) const;

  static OneHotGraph from_molecule(const MolecularGraph &g);
  /// Decodes element and bond classes; class-0 edges become absent bonds.
  /// Requires a molecular state space. Hydrogens are left unassigned.
  MolecularGraph to_molecule() const;

  /// Applies new_index[i] as the position of node i.
  OneHotGraph permuted(std::span<const std::size_t> new_index) const;

  friend bool operator==(const OneHotGraph &, const OneHotGraph &) = default;

private:
  std::vector<int> nodes_;
  std::vector<int> edges_;
};

} // namespace molguide

#endif // MOLGUIDE_DIFFUSION_STATE_HPP_
