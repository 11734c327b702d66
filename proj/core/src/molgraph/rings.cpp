//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/molgraph/rings.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>

namespace molguide {
namespace {
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

using EdgeSet = std::vector<std::uint64_t>;

struct Candidate {
  std::vector<std::size_t> cycle; // cycle order
  std::vector<std::size_t> sorted_atoms;
  EdgeSet edges;
};

struct ShortestPaths {
  std::vector<std::size_t> dist;
  std::vector<std::size_t> parent;
};

ShortestPaths bfs(const SimpleGraph &g, std::size_t root) {
  const std::size_t n = g.size();
  ShortestPaths sp { std::vector<std::size_t>(n, kInf),
                     std::vector<std::size_t>(n, kInf) };
  std::queue<std::size_t> q;
  sp.dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v: g.neighbors(u)) {
      if (sp.dist[v] == kInf) {
        sp.dist[v] = sp.dist[u] + 1;
        q.push(v);
      }
    }
  }
  // Deterministic predecessor: the smallest-index neighbor one step closer.
  for (std::size_t x = 0; x < n; ++x) {
    if (x == root || sp.dist[x] == kInf)
      continue;
    for (std::size_t y: g.neighbors(x)) {
      if (sp.dist[y] + 1 == sp.dist[x]) {
        sp.parent[x] = y;
        break;
      }
    }
  }
  return sp;
}

// Nodes root..x along the predecessor chain.
std::vector<std::size_t> path_from_root(const ShortestPaths &sp,
                                        std::size_t x) {
  std::vector<std::size_t> p;
  for (std::size_t u = x; u != kInf; u = sp.parent[u])
    p.push_back(u);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<std::size_t> normalize_cycle(std::vector<std::size_t> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1])
    std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

bool edge_set_from_cycle(const SimpleGraph &g,
                         const std::vector<std::size_t> &cycle, EdgeSet &out) {
  out.assign((g.edge_count() + 63) / 64, 0);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    std::size_t a = cycle[k], b = cycle[(k + 1) % cycle.size()];
    long id = g.edge_id(a, b);
    if (id < 0)
      return false;
    std::uint64_t &word = out[static_cast<std::size_t>(id) / 64];
    const std::uint64_t bit = std::uint64_t { 1 } << (id % 64);
    if (word & bit)
      return false;
    word |= bit;
  }
  return true;
}

// Joins root..a and root..b (sharing only the root) into one cycle.
bool join_paths(const std::vector<std::size_t> &a,
                const std::vector<std::size_t> &b,
                std::vector<std::size_t> &cycle) {
  for (std::size_t i = 1; i < a.size(); ++i)
    for (std::size_t j = 1; j < b.size(); ++j)
      if (a[i] == b[j])
        return false;
  cycle = a;
  for (std::size_t j = b.size(); j-- > 1;)
    cycle.push_back(b[j]);
  return cycle.size() >= 3;
}

std::size_t lowest_set_bit(const EdgeSet &v) {
  for (std::size_t w = 0; w < v.size(); ++w)
    if (v[w] != 0)
      return w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
  return kInf;
}
} // namespace

std::size_t RingInfo::smallest_ring_size(std::size_t i) const {
  std::size_t best = 0;
  for (const auto &r: rings)
    if (std::find(r.begin(), r.end(), i) != r.end())
      if (best == 0 || r.size() < best)
        best = r.size();
  return best;
}

std::size_t RingInfo::largest_ring_size() const {
  std::size_t best = 0;
  for (const auto &r: rings)
    best = std::max(best, r.size());
  return best;
}

std::size_t cycle_rank(const SimpleGraph &g) {
  return g.edge_count() + g.component_count() - g.size();
}

std::vector<bool> cyclic_edges(const SimpleGraph &g) {
  // Iterative Tarjan bridge finding.
  const std::size_t n = g.size();
  std::vector<std::size_t> disc(n, kInf), low(n, 0);
  std::vector<bool> cyclic(g.edge_count(), true);
  std::size_t timer = 0;

  struct Frame {
    std::size_t node, parent, next;
  };
  std::vector<Frame> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] != kInf)
      continue;
    disc[s] = low[s] = timer++;
    stack.push_back({ s, kInf, 0 });
    while (!stack.empty()) {
      Frame &f = stack.back();
      auto nbrs = g.neighbors(f.node);
      if (f.next < nbrs.size()) {
        std::size_t v = nbrs[f.next++];
        if (v == f.parent)
          continue;
        if (disc[v] == kInf) {
          disc[v] = low[v] = timer++;
          stack.push_back({ v, f.node, 0 });
        } else {
          low[f.node] = std::min(low[f.node], disc[v]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          std::size_t p = stack.back().node;
          low[p] = std::min(low[p], low[done.node]);
          if (low[done.node] > disc[p])
            cyclic[static_cast<std::size_t>(g.edge_id(p, done.node))] = false;
        }
      }
    }
  }
  return cyclic;
}

RingInfo perceive_rings(const SimpleGraph &g) {
  const std::size_t n = g.size();
  RingInfo info;
  info.n = n;
  info.atom_in_ring.assign(n, false);
  info.bond_in_ring_matrix.assign(n * n, false);

  const auto cyclic = cyclic_edges(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!cyclic[e])
      continue;
    auto [a, b] = g.edges()[e];
    info.atom_in_ring[a] = info.atom_in_ring[b] = true;
    info.bond_in_ring_matrix[a * n + b] = true;
    info.bond_in_ring_matrix[b * n + a] = true;
  }

  const std::size_t rank = cycle_rank(g);
  if (rank == 0)
    return info;

  std::map<EdgeSet, Candidate> unique;
  auto consider = [&](std::vector<std::size_t> cycle) {
    EdgeSet es;
    if (!edge_set_from_cycle(g, cycle, es))
      return;
    if (unique.count(es) != 0)
      return;
    Candidate c;
    c.cycle = normalize_cycle(std::move(cycle));
    c.sorted_atoms = c.cycle;
    std::sort(c.sorted_atoms.begin(), c.sorted_atoms.end());
    c.edges = es;
    unique.emplace(std::move(es), std::move(c));
  };

  std::vector<std::size_t> cycle;
  for (std::size_t v = 0; v < n; ++v) {
    if (!info.atom_in_ring[v])
      continue;
    ShortestPaths sp = bfs(g, v);
    std::vector<std::vector<std::size_t>> paths(n);
    for (std::size_t x = 0; x < n; ++x)
      if (sp.dist[x] != kInf)
        paths[x] = path_from_root(sp, x);

    // Odd candidates: shortest paths to both ends of an edge.
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!cyclic[e])
        continue;
      auto [x, y] = g.edges()[e];
      if (sp.dist[x] == kInf || sp.dist[y] == kInf)
        continue;
      if (join_paths(paths[x], paths[y], cycle))
        consider(cycle);
    }
    // Even candidates: two distinct predecessors of one vertex.
    for (std::size_t x = 0; x < n; ++x) {
      if (x == v || sp.dist[x] == kInf)
        continue;
      auto nbrs = g.neighbors(x);
      for (std::size_t a = 0; a < nbrs.size(); ++a) {
        if (sp.dist[nbrs[a]] + 1 != sp.dist[x])
          continue;
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
          if (sp.dist[nbrs[b]] + 1 != sp.dist[x])
            continue;
          auto pa = paths[nbrs[a]];
          pa.push_back(x);
          if (join_paths(pa, paths[nbrs[b]], cycle))
            consider(cycle);
        }
      }
    }
  }

  std::vector<const Candidate *> order;
  order.reserve(unique.size());
  for (const auto &[key, c]: unique)
    order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const Candidate *a, const Candidate *b) {
              if (a->cycle.size() != b->cycle.size())
                return a->cycle.size() < b->cycle.size();
              return a->sorted_atoms < b->sorted_atoms;
            });

  // GF(2) elimination; basis rows indexed by their lowest set bit.
  std::map<std::size_t, EdgeSet> basis;
  for (const Candidate *c: order) {
    EdgeSet v = c->edges;
    for (;;) {
      std::size_t pivot = lowest_set_bit(v);
      if (pivot == kInf)
        break;
      auto it = basis.find(pivot);
      if (it == basis.end()) {
        basis.emplace(pivot, v);
        info.rings.push_back(c->cycle);
        break;
      }
      for (std::size_t w = 0; w < v.size(); ++w)
        v[w] ^= it->second[w];
    }
    if (info.rings.size() == rank)
      break;
  }
  return info;
}

RingInfo perceive_rings(const MolecularGraph &g) {
  return perceive_rings(SimpleGraph::from_molecule(g));
}

} // namespace molguide
