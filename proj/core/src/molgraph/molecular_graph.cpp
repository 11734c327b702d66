//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/molgraph/molecular_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "molguide/common/error.hpp"

namespace molguide {

MolecularGraph::MolecularGraph(std::vector<Element> atoms)
    : atoms_(std::move(atoms)),
      bonds_(atoms_.size() * atoms_.size(), BondClass::kNone),
      implicit_h_(atoms_.size(), kUnassigned) { }

void MolecularGraph::set_bond(std::size_t i, std::size_t j, BondClass b) {
  const std::size_t n = size();
  if (i >= n || j >= n)
    throw std::invalid_argument("set_bond: atom index out of range");
  if (i == j)
    throw std::invalid_argument("set_bond: self bonds are not allowed");
  bonds_[i * n + j] = b;
  bonds_[j * n + i] = b;
}

std::size_t MolecularGraph::add_atom(Element e) {
  const std::size_t n = size();
  std::vector<BondClass> grown((n + 1) * (n + 1), BondClass::kNone);
  for (std::size_t i = 0; i < n; ++i)
    std::copy_n(bonds_.begin() + static_cast<long>(i * n), n,
                grown.begin() + static_cast<long>(i * (n + 1)));
  bonds_ = std::move(grown);
  atoms_.push_back(e);
  implicit_h_.push_back(kUnassigned);
  return n;
}

void MolecularGraph::clear_hydrogens() {
  std::fill(implicit_h_.begin(), implicit_h_.end(), kUnassigned);
}

bool MolecularGraph::hydrogens_assigned() const noexcept {
  return std::all_of(implicit_h_.begin(), implicit_h_.end(),
                     [](int h) { return h >= 0; });
}

std::size_t MolecularGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < size(); ++j)
    d += bond(i, j) != BondClass::kNone;
  return d;
}

std::vector<std::size_t> MolecularGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (bond(i, j) != BondClass::kNone)
      out.push_back(j);
  return out;
}

std::size_t MolecularGraph::bond_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      count += bond(i, j) != BondClass::kNone;
  return count;
}

std::vector<std::pair<std::size_t, std::size_t>>
MolecularGraph::bond_list() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (bond(i, j) != BondClass::kNone)
        out.emplace_back(i, j);
  return out;
}

bool MolecularGraph::is_aromatic_atom(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (bond(i, j) == BondClass::kAromatic)
      return true;
  return false;
}

int MolecularGraph::bond_order_sum_x2(std::size_t i) const {
  int sum = 0;
  for (std::size_t j = 0; j < size(); ++j)
    sum += bond_order_x2(bond(i, j));
  return sum;
}

MolecularGraph
MolecularGraph::permuted(std::span<const std::size_t> new_index) const {
  const std::size_t n = size();
  if (new_index.size() != n)
    throw std::invalid_argument("permuted: permutation size mismatch");
  std::vector<Element> atoms(n);
  for (std::size_t i = 0; i < n; ++i)
    atoms[new_index[i]] = atoms_[i];
  MolecularGraph out(std::move(atoms));
  for (std::size_t i = 0; i < n; ++i) {
    out.implicit_h_[new_index[i]] = implicit_h_[i];
    for (std::size_t j = 0; j < n; ++j)
      out.bonds_[new_index[i] * n + new_index[j]] = bonds_[i * n + j];
  }
  return out;
}

double MolecularGraph::molecular_weight() const {
  if (!hydrogens_assigned())
    throw DataError("molecular_weight: implicit hydrogens are not assigned");
  double w = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    w += element_mass(atoms_[i]) + kHydrogenMass * implicit_h_[i];
  return w;
}

} // namespace molguide
