//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/diffusion/state.hpp"

#include <stdexcept>
#include <string>

#include "molguide/common/error.hpp"

namespace molguide {

void OneHotGraph::set_edge(std::size_t i, std::size_t j, int c) {
  if (i == j)
    throw std::invalid_argument("OneHotGraph::set_edge: diagonal entry");
  const std::size_t n = size();
  edges_[i * n + j] = edges_[j * n + i] = c;
}

std::vector<double> OneHotGraph::node_one_hot(std::size_t classes) const {
  std::vector<double> out(size() * classes, 0.0);
  for (std::size_t i = 0; i < size(); ++i)
    out[i * classes + static_cast<std::size_t>(nodes_[i])] = 1.0;
  return out;
}

std::vector<double> OneHotGraph::edge_one_hot(std::size_t classes) const {
  std::vector<double> out(edges_.size() * classes, 0.0);
  for (std::size_t p = 0; p < edges_.size(); ++p)
    out[p * classes + static_cast<std::size_t>(edges_[p])] = 1.0;
  return out;
}

void OneHotGraph::validate(const StateSpace &space) const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes_[i] < 0 || static_cast<std::size_t>(nodes_[i]) >= space.atom_classes)
      throw DataError("node class out of range at node " + std::to_string(i));
    if (edges_[i * n + i] != 0)
      throw DataError("nonzero diagonal edge class");
    for (std::size_t j = 0; j < n; ++j) {
      const int c = edges_[i * n + j];
      if (c < 0 || static_cast<std::size_t>(c) >= space.edge_classes)
        throw DataError("edge class out of range");
      if (c != edges_[j * n + i])
        throw DataError("edge classes not symmetric");
    }
  }
}

OneHotGraph OneHotGraph::from_molecule(const MolecularGraph &g) {
  OneHotGraph out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.nodes_[i] = static_cast<int>(element_index(g.atom(i)));
    for (std::size_t j = 0; j < g.size(); ++j)
      out.edges_[i * g.size() + j] = static_cast<int>(bond_index(g.bond(i, j)));
  }
  return out;
}

MolecularGraph OneHotGraph::to_molecule() const {
  validate(StateSpace::molecules());
  std::vector<Element> atoms(size());
  for (std::size_t i = 0; i < size(); ++i)
    atoms[i] = kAllElements[static_cast<std::size_t>(nodes_[i])];
  MolecularGraph g(std::move(atoms));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (int c = edge(i, j); c != 0)
        g.set_bond(i, j, static_cast<BondClass>(c));
  return g;
}

OneHotGraph OneHotGraph::permuted(std::span<const std::size_t> new_index) const {
  const std::size_t n = size();
  if (new_index.size() != n)
    throw std::invalid_argument("OneHotGraph::permuted: size mismatch");
  OneHotGraph out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.nodes_[new_index[i]] = nodes_[i];
    for (std::size_t j = 0; j < n; ++j)
      out.edges_[new_index[i] * n + new_index[j]] = edges_[i * n + j];
  }
  return out;
}

} // namespace molguide
