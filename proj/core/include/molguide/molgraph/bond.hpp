//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_MOLGRAPH_BOND_HPP_
#define MOLGUIDE_MOLGRAPH_BOND_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace molguide {

/// Edge states. kNone is a real state of the diffusion edge matrix, not
/// something the SMILES parser produces. The value is the edge class index.
enum class BondClass: std::uint8_t {
  kNone = 0,
  kSingle,
  kDouble,
  kTriple,
  kAromatic,
};

inline constexpr std::size_t kBondClassCount = 5;

/// Bond order contribution {0, 1, 2, 3, 1.5}.
constexpr double bond_order(BondClass b) noexcept {
  switch (b) {
  case BondClass::kNone:
    return 0.0;
  case BondClass::kSingle:
    return 1.0;
  case BondClass::kDouble:
    return 2.0;
  case BondClass::kTriple:
    return 3.0;
  case BondClass::kAromatic:
    return 1.5;
  }
  return 0.0;
}

/// Twice the bond order, as an exact integer.
constexpr int bond_order_x2(BondClass b) noexcept {
  return static_cast<int>(2.0 * bond_order(b));
}

constexpr std::size_t bond_index(BondClass b) noexcept {
  return static_cast<std::size_t>(b);
}

std::string_view bond_name(BondClass b) noexcept;

} // namespace molguide

#endif // MOLGUIDE_MOLGRAPH_BOND_HPP_
