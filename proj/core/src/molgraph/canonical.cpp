//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/molgraph/canonical.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "molguide/molgraph/rings.hpp"
#include "molguide/molgraph/simple_graph.hpp"
#include "molguide/molgraph/smiles.hpp"
#include "molguide/molgraph/valence.hpp"

namespace molguide {
namespace {
// Hydrogen count the parser infers for an atom written without brackets.
int default_hydrogens(const MolecularGraph &g, std::size_t i, bool aromatic) {
  const Element e = g.atom(i);
  if (!aromatic) {
    const int sum = g.bond_order_sum_x2(i) / 2;
    auto v = smallest_valence_at_least(e, sum);
    return v ? *v - sum : -1;
  }
  int base = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    BondClass b = g.bond(i, j);
    base += b == BondClass::kAromatic ? 1 : bond_order_x2(b) / 2;
  }
  auto v = smallest_valence_at_least(e, base);
  if (!v)
    return -1;
  const int free = *v - base;
  return free >= 1 ? free - 1 : 0;
}

std::string atom_token(const MolecularGraph &g, std::size_t i, bool aromatic) {
  std::string symbol(element_symbol(g.atom(i)));
  if (aromatic) {
    if (!aromatic_capable(g.atom(i)))
      throw DataError("write_smiles: element cannot be aromatic");
    symbol[0] = static_cast<char>(std::tolower(symbol[0]));
  }
  const int h = g.implicit_h(i);
  if (h == default_hydrogens(g, i, aromatic))
    return symbol;
  std::string token = "[" + symbol;
  if (h > 0) {
    token += 'H';
    if (h > 1)
      token += std::to_string(h);
  }
  return token + "]";
}

std::string bond_token(BondClass b, bool both_aromatic) {
  switch (b) {
  case BondClass::kSingle:
    return both_aromatic ? "-" : "";
  case BondClass::kDouble:
    return "=";
  case BondClass::kTriple:
    return "#";
  case BondClass::kAromatic:
    return both_aromatic ? "" : ":";
  case BondClass::kNone:
    break;
  }
  return "";
}

std::string ring_label(int digit) {
  if (digit < 10)
    return std::string(1, static_cast<char>('0' + digit));
  if (digit > 99)
    throw DataError("write_smiles: too many simultaneous ring closures");
  return "%" + std::to_string(digit);
}

class Writer {
public:
  Writer(const MolecularGraph &g, std::span<const std::size_t> ranks)
      : g_(g), ranks_(ranks), n_(g.size()), aromatic_(n_), nbrs_(n_),
        visited_(n_, false), children_(n_), openings_(n_), closings_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      aromatic_[i] = g.is_aromatic_atom(i);
      nbrs_[i] = g.neighbors(i);
      std::sort(nbrs_[i].begin(), nbrs_[i].end(),
                [&](std::size_t a, std::size_t b) {
                  return ranks_[a] < ranks_[b];
                });
    }
  }

  std::string write() {
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ranks_[a] < ranks_[b];
    });
    std::vector<std::size_t> roots;
    for (std::size_t a: order) {
      if (!visited_[a]) {
        roots.push_back(a);
        discover(a, static_cast<std::size_t>(-1));
      }
    }
    std::string out;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      if (r > 0)
        out += '.';
      emit(roots[r], out);
    }
    return out;
  }

private:
  void discover(std::size_t u, std::size_t parent) {
    visited_[u] = true;
    bool parent_skipped = false;
    for (std::size_t v: nbrs_[u]) {
      if (v == parent && !parent_skipped) {
        parent_skipped = true;
        continue;
      }
      if (!visited_[v]) {
        children_[u].push_back(v);
        discover(v, u);
      } else if (!closure_seen_.count(std::minmax(u, v))) {
        // v is an ancestor: the ring opens at v and closes at u.
        closure_seen_.insert(std::minmax(u, v));
        openings_[v].push_back(u);
        closings_[u].push_back(v);
      }
    }
  }

  bool both_aromatic(std::size_t a, std::size_t b) const {
    return aromatic_[a] && aromatic_[b];
  }

  void emit(std::size_t u, std::string &out) {
    out += atom_token(g_, u, aromatic_[u]);

    auto by_rank = [&](std::size_t a, std::size_t b) {
      return ranks_[a] < ranks_[b];
    };
    std::sort(closings_[u].begin(), closings_[u].end(), by_rank);
    std::sort(openings_[u].begin(), openings_[u].end(), by_rank);

    std::vector<int> released;
    for (std::size_t partner: closings_[u]) {
      auto it = digits_.find(std::minmax(u, partner));
      out += ring_label(it->second);
      released.push_back(it->second);
      digits_.erase(it);
    }
    for (std::size_t partner: openings_[u]) {
      int d = 1;
      while (in_use_.count(d))
        ++d;
      in_use_.insert(d);
      digits_[std::minmax(u, partner)] = d;
      out += bond_token(g_.bond(u, partner), both_aromatic(u, partner));
      out += ring_label(d);
    }
    for (int d: released)
      in_use_.erase(d);

    const auto &kids = children_[u];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const bool branch = k + 1 < kids.size();
      if (branch)
        out += '(';
      out += bond_token(g_.bond(u, kids[k]), both_aromatic(u, kids[k]));
      emit(kids[k], out);
      if (branch)
        out += ')';
    }
  }

  const MolecularGraph &g_;
  std::span<const std::size_t> ranks_;
  std::size_t n_;
  std::vector<bool> aromatic_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::vector<bool> visited_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::vector<std::size_t>> openings_;
  std::vector<std::vector<std::size_t>> closings_;
  std::set<std::pair<std::size_t, std::size_t>> closure_seen_;
  std::map<std::pair<std::size_t, std::size_t>, int> digits_;
  std::set<int> in_use_;
};

// Dense ranks from arbitrary sortable keys.
template <class Key>
std::vector<std::size_t> dense_ranks(const std::vector<Key> &keys) {
  std::vector<std::size_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> ranks(keys.size());
  std::size_t r = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0 && keys[idx[k - 1]] < keys[idx[k]])
      ++r;
    ranks[idx[k]] = r;
  }
  return ranks;
}

std::size_t class_count(const std::vector<std::size_t> &ranks) {
  return ranks.empty() ? 0
                       : *std::max_element(ranks.begin(), ranks.end()) + 1;
}

class Canonicalizer {
public:
  explicit Canonicalizer(const MolecularGraph &g): g_(g), n_(g.size()) {
    nbrs_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      nbrs_[i] = g.neighbors(i);
  }

  std::vector<std::size_t> initial_ranks() const {
    const SimpleGraph topo = SimpleGraph::from_molecule(g_);
    const auto cyclic = cyclic_edges(topo);
    using Key = std::array<int, 7>;
    std::vector<Key> keys(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      int ring_bonds = 0;
      for (std::size_t j: nbrs_[i])
        ring_bonds += cyclic[static_cast<std::size_t>(topo.edge_id(i, j))];
      keys[i] = { static_cast<int>(nbrs_[i].size()),
                  static_cast<int>(element_index(g_.atom(i))),
                  g_.implicit_h(i),
                  g_.is_aromatic_atom(i) ? 1 : 0,
                  ring_bonds,
                  g_.bond_order_sum_x2(i),
                  0 };
    }
    return dense_ranks(keys);
  }

  std::vector<std::size_t> refine(std::vector<std::size_t> ranks) const {
    std::size_t classes = class_count(ranks);
    for (;;) {
      using Key = std::pair<std::size_t,
                            std::vector<std::pair<std::size_t, std::size_t>>>;
      std::vector<Key> keys(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        keys[i].first = ranks[i];
        auto &env = keys[i].second;
        env.reserve(nbrs_[i].size());
        for (std::size_t j: nbrs_[i])
          env.emplace_back(ranks[j], bond_index(g_.bond(i, j)));
        std::sort(env.begin(), env.end());
      }
      auto next = dense_ranks(keys);
      std::size_t next_classes = class_count(next);
      ranks = std::move(next);
      if (next_classes == classes)
        return ranks;
      classes = next_classes;
    }
  }

  CanonicalForm run() {
    search(refine(initial_ranks()));
    return { best_ranks_, best_smiles_ };
  }

private:
  static constexpr std::size_t kLeafLimit = 4096;

  // Swapping a and b is an automorphism when they see identical bonds to
  // every other atom.
  bool twins(std::size_t a, std::size_t b) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (x == a || x == b)
        continue;
      if (g_.bond(a, x) != g_.bond(b, x))
        return false;
    }
    return true;
  }

  void search(const std::vector<std::size_t> &ranks) {
    if (leaves_ >= kLeafLimit)
      return;
    if (class_count(ranks) == n_) {
      ++leaves_;
      std::string s = Writer(g_, ranks).write();
      if (best_ranks_.empty() || s < best_smiles_) {
        best_smiles_ = std::move(s);
        best_ranks_ = ranks;
      }
      return;
    }

    std::vector<std::size_t> sizes(class_count(ranks), 0);
    for (std::size_t r: ranks)
      ++sizes[r];
    std::size_t tied = 0;
    while (sizes[tied] < 2)
      ++tied;

    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n_; ++i)
      if (ranks[i] == tied)
        members.push_back(i);

    std::vector<std::size_t> representatives;
    for (std::size_t m: members) {
      bool covered = false;
      for (std::size_t r: representatives) {
        if (twins(r, m)) {
          covered = true;
          break;
        }
      }
      if (!covered)
        representatives.push_back(m);
    }

    for (std::size_t chosen: representatives) {
      std::vector<std::pair<std::size_t, int>> keys(n_);
      for (std::size_t i = 0; i < n_; ++i)
        keys[i] = { ranks[i], ranks[i] == tied && i != chosen ? 1 : 0 };
      search(refine(dense_ranks(keys)));
      if (leaves_ >= kLeafLimit)
        return;
    }
  }

  const MolecularGraph &g_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::size_t leaves_ = 0;
  std::vector<std::size_t> best_ranks_;
  std::string best_smiles_;
};

MolecularGraph with_hydrogens(const MolecularGraph &g) {
  ValenceReport report = check_valence(g);
  if (!report.valid)
    throw DataError("canonical form requires a valence-valid molecule");
  MolecularGraph out = g;
  for (std::size_t i = 0; i < g.size(); ++i)
    out.set_implicit_h(i, report.implicit_h[i]);
  return out;
}
} // namespace

CanonicalForm canonicalize(const MolecularGraph &g) {
  if (g.empty())
    throw DataError("canonical form of an empty graph");
  MolecularGraph h = with_hydrogens(g);
  return Canonicalizer(h).run();
}

std::vector<std::size_t> canonical_ranks(const MolecularGraph &g) {
  return canonicalize(g).ranks;
}

std::vector<std::size_t> refined_classes(const MolecularGraph &g) {
  MolecularGraph h = with_hydrogens(g);
  Canonicalizer c(h);
  return c.refine(c.initial_ranks());
}

std::string write_smiles(const MolecularGraph &g) {
  return canonicalize(g).smiles;
}

} // namespace molguide
