//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/molgraph/element.hpp"

#include "molguide/molgraph/bond.hpp"

namespace molguide {
namespace {
struct ElementData {
  std::string_view symbol;
  double mass;
  std::span<const int> valences;
  bool aromatic;
};

constexpr int kValC[] = { 4 };
constexpr int kValN[] = { 3 };
constexpr int kValO[] = { 2 };
constexpr int kValS[] = { 2, 4, 6 };
constexpr int kValHalogen[] = { 1 };

const ElementData kTable[kElementCount] = {
  {  "C", 12.0107,       kValC,  true },
  {  "N", 14.0067,       kValN,  true },
  {  "O", 15.9994,       kValO,  true },
  {  "S", 32.0650,       kValS,  true },
  {  "F", 18.9984, kValHalogen, false },
  { "Cl", 35.4530, kValHalogen, false },
  { "Br", 79.9040, kValHalogen, false },
};
} // namespace

std::string_view element_symbol(Element e) noexcept {
  return kTable[element_index(e)].symbol;
}

double element_mass(Element e) noexcept {
  return kTable[element_index(e)].mass;
}

std::span<const int> allowed_valences(Element e) noexcept {
  return kTable[element_index(e)].valences;
}

std::optional<int> smallest_valence_at_least(Element e, int bond_sum) noexcept {
  for (int v: allowed_valences(e))
    if (v >= bond_sum)
      return v;
  return std::nullopt;
}

bool aromatic_capable(Element e) noexcept {
  return kTable[element_index(e)].aromatic;
}

std::optional<Element> element_from_symbol(std::string_view symbol) noexcept {
  for (Element e: kAllElements)
    if (kTable[element_index(e)].symbol == symbol)
      return e;
  return std::nullopt;
}

std::string_view bond_name(BondClass b) noexcept {
  switch (b) {
  case BondClass::kNone:
    return "none";
  case BondClass::kSingle:
    return "single";
  case BondClass::kDouble:
    return "double";
  case BondClass::kTriple:
    return "triple";
  case BondClass::kAromatic:
    return "aromatic";
  }
  return "?";
}

} // namespace molguide
