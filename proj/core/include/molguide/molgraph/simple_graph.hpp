//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_SIMPLE_GRAPH_HPP_
#define MOLGUIDE_MOLGRAPH_SIMPLE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace molguide {

class MolecularGraph;

/// Unlabeled undirected graph used by ring perception and the structural
/// features. Neighbor lists are sorted ascending.
class SimpleGraph {
public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n): adj_(n) { }

  /// Edge (i, j) present iff present[i * n + j] != 0; must be symmetric.
  static SimpleGraph from_matrix(std::size_t n,
                                 std::span<const std::uint8_t> present);
  /// Edge present iff the class index is nonzero (class 0 is "no bond").
  static SimpleGraph from_edge_classes(std::size_t n,
                                       std::span<const int> edge_classes);
  static SimpleGraph from_molecule(const MolecularGraph &g);

  void add_edge(std::size_t i, std::size_t j);

  std::size_t size() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const std::size_t> neighbors(std::size_t i) const {
    return adj_[i];
  }
  bool has_edge(std::size_t i, std::size_t j) const;
  /// Edges as (i < j) in insertion order; the position is the edge id.
  std::span<const std::pair<std::size_t, std::size_t>> edges() const noexcept {
    return edges_;
  }
  /// Edge id of (i, j), or -1.
  long edge_id(std::size_t i, std::size_t j) const;

  /// Component id per node, numbered by first appearance.
  std::vector<std::size_t> component_ids() const;
  std::size_t component_count() const;

private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_SIMPLE_GRAPH_HPP_
