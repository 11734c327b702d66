//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/molgraph/valence.hpp"

#include <algorithm>
#include <set>

#include "molguide/molgraph/rings.hpp"

namespace molguide {
namespace {
enum class PiNeed {
  kNone,
  kRequired,
  kOptional,
  kImpossible,
};

PiNeed pi_need(const MolecularGraph &g, std::size_t i) {
  const Element e = g.atom(i);
  if (!aromatic_capable(e))
    return PiNeed::kImpossible;
  int base = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    BondClass b = g.bond(i, j);
    base += b == BondClass::kAromatic ? 1 : bond_order_x2(b) / 2;
  }
  const int h = g.implicit_h(i);
  if (h >= 0) {
    auto v = smallest_valence_at_least(e, base + h);
    if (!v)
      return PiNeed::kImpossible;
    switch (*v - base - h) {
    case 0:
      return PiNeed::kNone;
    case 1:
      return PiNeed::kRequired;
    default:
      return PiNeed::kImpossible;
    }
  }
  auto v = smallest_valence_at_least(e, base);
  if (!v)
    return PiNeed::kImpossible;
  if (*v - base == 0)
    return PiNeed::kNone;
  return e == Element::kC ? PiNeed::kRequired : PiNeed::kOptional;
}

// Exhaustive matching search over one aromatic component: every required
// atom must be matched; among such matchings, the one matching the most
// atoms wins.
class PiMatcher {
public:
  PiMatcher(std::vector<std::size_t> atoms, std::vector<PiNeed> need,
            std::vector<std::vector<std::size_t>> adj)
      : atoms_(std::move(atoms)), need_(std::move(need)), adj_(std::move(adj)),
        mate_(atoms_.size(), kFree) {
    for (PiNeed p: need_)
      eligible_ += p != PiNeed::kNone;
  }

  bool solve() {
    search_required();
    return found_;
  }

  // Local indices of the best matching (mate per atom or kFree).
  const std::vector<std::size_t> &mates() const { return best_; }

  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

private:
  static constexpr std::size_t kBudget = 200000;

  bool done() const { return budget_ >= kBudget || best_count_ == eligible_; }

  void record() {
    std::size_t count = 0;
    for (std::size_t m: mate_)
      count += m != kFree;
    if (!found_ || count > best_count_) {
      found_ = true;
      best_count_ = count;
      best_ = mate_;
    }
  }

  void search_required() {
    if (done())
      return;
    ++budget_;
    std::size_t r = kFree;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (need_[i] == PiNeed::kRequired && mate_[i] == kFree) {
        r = i;
        break;
      }
    }
    if (r == kFree) {
      search_optional(0);
      return;
    }
    for (std::size_t u: adj_[r]) {
      if (mate_[u] != kFree || need_[u] == PiNeed::kNone)
        continue;
      mate_[r] = u;
      mate_[u] = r;
      search_required();
      mate_[r] = mate_[u] = kFree;
      if (done())
        return;
    }
  }

  void search_optional(std::size_t from) {
    if (done())
      return;
    ++budget_;
    std::size_t o = kFree;
    for (std::size_t i = from; i < atoms_.size(); ++i) {
      if (need_[i] != PiNeed::kOptional || mate_[i] != kFree)
        continue;
      for (std::size_t u: adj_[i]) {
        if (mate_[u] == kFree && need_[u] == PiNeed::kOptional) {
          o = i;
          break;
        }
      }
      if (o != kFree)
        break;
    }
    if (o == kFree) {
      record();
      return;
    }
    for (std::size_t u: adj_[o]) {
      if (mate_[u] != kFree || need_[u] != PiNeed::kOptional)
        continue;
      mate_[o] = u;
      mate_[u] = o;
      search_optional(o + 1);
      mate_[o] = mate_[u] = kFree;
      if (done())
        return;
    }
    // Leave o unmatched.
    search_optional(o + 1);
  }

  std::vector<std::size_t> atoms_;
  std::vector<PiNeed> need_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> best_;
  std::size_t eligible_ = 0;
  std::size_t best_count_ = 0;
  std::size_t budget_ = 0;
  bool found_ = false;
};

struct KekuleResult {
  MolecularGraph graph;
  std::vector<std::size_t> failed_atoms;
};

KekuleResult kekulize_impl(const MolecularGraph &g) {
  const std::size_t n = g.size();
  KekuleResult result { g, {} };
  MolecularGraph &out = result.graph;

  std::vector<PiNeed> need(n, PiNeed::kNone);
  std::vector<bool> aromatic(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    aromatic[i] = g.is_aromatic_atom(i);
    if (aromatic[i])
      need[i] = pi_need(g, i);
  }

  // Aromatic components.
  constexpr std::size_t kNoComponent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kNoComponent);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (!aromatic[s] || comp[s] != kNoComponent)
      continue;
    std::vector<std::size_t> members { s };
    comp[s] = components.size();
    for (std::size_t k = 0; k < members.size(); ++k) {
      std::size_t u = members[k];
      for (std::size_t v = 0; v < n; ++v) {
        if (g.bond(u, v) == BondClass::kAromatic
            && comp[v] == kNoComponent) {
          comp[v] = components.size();
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }

  for (const auto &members: components) {
    bool impossible = false;
    std::vector<PiNeed> local_need;
    for (std::size_t a: members) {
      local_need.push_back(need[a]);
      impossible |= need[a] == PiNeed::kImpossible;
    }
    std::vector<std::vector<std::size_t>> adj(members.size());
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = 0; y < members.size(); ++y)
        if (x != y && g.bond(members[x], members[y]) == BondClass::kAromatic)
          adj[x].push_back(y);

    PiMatcher matcher(members, local_need, adj);
    if (impossible || !matcher.solve()) {
      result.failed_atoms.insert(result.failed_atoms.end(), members.begin(),
                                 members.end());
      continue;
    }
    const auto &mates = matcher.mates();
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y: adj[x]) {
        if (y < x)
          continue;
        out.set_bond(members[x], members[y],
                     mates[x] == y ? BondClass::kDouble : BondClass::kSingle);
      }
    }
  }
  std::sort(result.failed_atoms.begin(), result.failed_atoms.end());

  // Hydrogens from the (now integral) bond orders.
  for (std::size_t i = 0; i < n; ++i) {
    const int sum = out.bond_order_sum_x2(i) / 2;
    const int hint = g.implicit_h(i);
    if (aromatic[i] && hint >= 0) {
      auto v = smallest_valence_at_least(g.atom(i), sum + hint);
      out.set_implicit_h(i, v && *v == sum + hint
                                ? hint
                                : MolecularGraph::kUnassigned);
      continue;
    }
    auto v = smallest_valence_at_least(g.atom(i), sum);
    out.set_implicit_h(i, v ? *v - sum : MolecularGraph::kUnassigned);
  }
  return result;
}
} // namespace

MolecularGraph kekulize(const MolecularGraph &g) {
  KekuleResult r = kekulize_impl(g);
  if (!r.failed_atoms.empty())
    throw KekulizeError("kekulize: no alternating bond assignment exists",
                        r.failed_atoms);
  return std::move(r.graph);
}

std::optional<MolecularGraph> try_kekulize(const MolecularGraph &g) {
  KekuleResult r = kekulize_impl(g);
  if (!r.failed_atoms.empty())
    return std::nullopt;
  return std::move(r.graph);
}

ValenceReport check_valence(const MolecularGraph &g) {
  ValenceReport report;
  if (g.empty())
    return report;

  KekuleResult k = kekulize_impl(g);
  std::set<std::size_t> bad(k.failed_atoms.begin(), k.failed_atoms.end());
  for (std::size_t i = 0; i < g.size(); ++i)
    if (k.graph.implicit_h(i) < 0)
      bad.insert(i);

  // Aromatic bonds outside rings and aromatic rings under five atoms are
  // rejected.
  bool any_aromatic = false;
  for (std::size_t i = 0; i < g.size() && !any_aromatic; ++i)
    any_aromatic = g.is_aromatic_atom(i);
  if (any_aromatic) {
    RingInfo rings = perceive_rings(g);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (g.bond(i, j) == BondClass::kAromatic && !rings.bond_in_ring(i, j)) {
          bad.insert(i);
          bad.insert(j);
        }
    for (const auto &ring: rings.rings) {
      if (ring.size() >= 5)
        continue;
      bool all_aromatic = true;
      for (std::size_t k2 = 0; k2 < ring.size(); ++k2)
        all_aromatic &= g.bond(ring[k2], ring[(k2 + 1) % ring.size()])
                        == BondClass::kAromatic;
      if (all_aromatic)
        bad.insert(ring.begin(), ring.end());
    }
  }

  report.violations.assign(bad.begin(), bad.end());
  report.valid = report.violations.empty();
  report.implicit_h.assign(k.graph.implicit_hydrogens().begin(),
                           k.graph.implicit_hydrogens().end());
  return report;
}

MolecularGraph assign_hydrogens(const MolecularGraph &g) {
  ValenceReport report = check_valence(g);
  if (!report.valid)
    throw DataError("molecule fails valence checks");
  MolecularGraph out = g;
  for (std::size_t i = 0; i < g.size(); ++i)
    out.set_implicit_h(i, report.implicit_h[i]);
  return out;
}

MolecularGraph normalize_aromaticity(const MolecularGraph &g) {
  MolecularGraph k = kekulize(assign_hydrogens(g));
  const RingInfo rings = perceive_rings(k);
  const std::size_t n = k.size();

  auto pi_electrons = [&](std::size_t a) -> int {
    bool single_only = true;
    int ring_doubles = 0;
    for (std::size_t b: k.neighbors(a)) {
      const BondClass c = k.bond(a, b);
      if (c == BondClass::kSingle)
        continue;
      single_only = false;
      if (c == BondClass::kDouble && rings.bond_in_ring(a, b))
        ++ring_doubles;
      else
        return -1;
    }
    if (ring_doubles == 1)
      return 1;
    const Element e = k.atom(a);
    if (single_only && (e == Element::kN || e == Element::kO || e == Element::kS))
      return 2;
    return -1;
  };

  std::vector<bool> aromatic_bond(n * n, false);
  for (const auto &ring: rings.rings) {
    int electrons = 0;
    bool ok = true;
    for (std::size_t a: ring) {
      const int pi = pi_electrons(a);
      if (pi < 0) {
        ok = false;
        break;
      }
      electrons += pi;
    }
    if (!ok || electrons % 4 != 2)
      continue;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const std::size_t a = ring[i], b = ring[(i + 1) % ring.size()];
      aromatic_bond[a * n + b] = aromatic_bond[b * n + a] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (aromatic_bond[i * n + j])
        k.set_bond(i, j, BondClass::kAromatic);
  return k;
}

} // namespace molguide
