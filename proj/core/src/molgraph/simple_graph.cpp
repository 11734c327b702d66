//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/molgraph/simple_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

SimpleGraph SimpleGraph::from_matrix(std::size_t n,
                                     std::span<const std::uint8_t> present) {
  if (present.size() != n * n)
    throw std::invalid_argument("SimpleGraph: matrix size mismatch");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (present[i * n + j] != 0)
        g.add_edge(i, j);
  return g;
}

SimpleGraph SimpleGraph::from_edge_classes(std::size_t n,
                                           std::span<const int> edge_classes) {
  if (edge_classes.size() != n * n)
    throw std::invalid_argument("SimpleGraph: edge matrix size mismatch");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge_classes[i * n + j] != 0)
        g.add_edge(i, j);
  return g;
}

SimpleGraph SimpleGraph::from_molecule(const MolecularGraph &m) {
  SimpleGraph g(m.size());
  for (auto [i, j]: m.bond_list())
    g.add_edge(i, j);
  return g;
}

void SimpleGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == j || i >= size() || j >= size())
    throw std::invalid_argument("SimpleGraph::add_edge: bad endpoints");
  if (i > j)
    std::swap(i, j);
  if (has_edge(i, j))
    return;
  auto insert_sorted = [](std::vector<std::size_t> &v, std::size_t x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  };
  insert_sorted(adj_[i], j);
  insert_sorted(adj_[j], i);
  edges_.emplace_back(i, j);
}

bool SimpleGraph::has_edge(std::size_t i, std::size_t j) const {
  const auto &a = adj_[i];
  return std::binary_search(a.begin(), a.end(), j);
}

long SimpleGraph::edge_id(std::size_t i, std::size_t j) const {
  if (i > j)
    std::swap(i, j);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].first == i && edges_[e].second == j)
      return static_cast<long>(e);
  return -1;
}

std::vector<std::size_t> SimpleGraph::component_ids() const {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(size(), kUnseen);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < size(); ++s) {
    if (comp[s] != kUnseen)
      continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v: adj_[u]) {
        if (comp[v] == kUnseen) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::size_t SimpleGraph::component_count() const {
  auto comp = component_ids();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

} // namespace molguide
