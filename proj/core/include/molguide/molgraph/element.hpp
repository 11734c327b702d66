//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_ELEMENT_HPP_
#define MOLGUIDE_MOLGRAPH_ELEMENT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace molguide {

/// Heavy elements representable as graph nodes. Hydrogen is never a node;
/// it is carried as a per-atom implicit count. The enumerator value doubles
/// as the atom class index used by the diffusion state space.
enum class Element: std::uint8_t {
  kC = 0,
  kN,
  kO,
  kS,
  kF,
  kCl,
  kBr,
};

inline constexpr std::size_t kElementCount = 7;

inline constexpr std::array<Element, kElementCount> kAllElements = {
  Element::kC, Element::kN,  Element::kO,  Element::kS,
  Element::kF, Element::kCl, Element::kBr,
};

/// Standard atomic weight of hydrogen, used for implicit hydrogens.
inline constexpr double kHydrogenMass = 1.008;

std::string_view element_symbol(Element e) noexcept;

/// Standard atomic weight in daltons, to four decimal places.
double element_mass(Element e) noexcept;

/// Allowed valences in increasing order (C:{4}, N:{3}, O:{2}, S:{2,4,6},
/// halogens:{1}).
std::span<const int> allowed_valences(Element e) noexcept;

/// Smallest allowed valence that is >= bond_sum, if any.
std::optional<int> smallest_valence_at_least(Element e, int bond_sum) noexcept;

/// Whether the element may appear as a lowercase aromatic SMILES atom.
bool aromatic_capable(Element e) noexcept;

std::optional<Element> element_from_symbol(std::string_view symbol) noexcept;

constexpr std::size_t element_index(Element e) noexcept {
  return static_cast<std::size_t>(e);
}

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_ELEMENT_HPP_
