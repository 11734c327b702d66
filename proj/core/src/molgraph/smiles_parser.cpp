//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "molguide/molgraph/rings.hpp"
#include "molguide/molgraph/simple_graph.hpp"
#include "molguide/molgraph/smiles.hpp"
#include "molguide/molgraph/valence.hpp"

namespace molguide {

std::string_view smiles_error_kind_name(SmilesErrorKind kind) noexcept {
  switch (kind) {
  case SmilesErrorKind::kSyntax:
    return "syntax";
  case SmilesErrorKind::kUnsupportedElement:
    return "unsupported-element";
  case SmilesErrorKind::kUnclosedRing:
    return "unclosed-ring";
  case SmilesErrorKind::kUnbalancedParenthesis:
    return "unbalanced-parenthesis";
  case SmilesErrorKind::kChargeOrIsotope:
    return "charge-or-isotope";
  case SmilesErrorKind::kStereo:
    return "stereo";
  case SmilesErrorKind::kAromaticity:
    return "aromaticity";
  case SmilesErrorKind::kHydrogenCount:
    return "hydrogen-count";
  }
  return "unknown";
}

SmilesError::SmilesError(SmilesErrorKind kind, std::size_t position,
                         const std::string &message)
    : DataError("SMILES " + std::string(smiles_error_kind_name(kind))
                + " error at position " + std::to_string(position) + ": "
                + message),
      kind_(kind), position_(position) { }

namespace {
struct ParsedAtom {
  Element element;
  bool lowercase;
  bool bracket;
  int hydrogens; // bracket H count, else -1
  std::size_t position;
};

struct ParsedBond {
  std::size_t a, b;
  BondClass cls;
  bool explicit_symbol;
  std::size_t position;
};

struct PendingBond {
  BondClass cls;
  std::size_t position;
};

struct RingOpening {
  std::size_t atom;
  std::optional<PendingBond> bond;
  std::size_t position;
};

class Parser {
public:
  explicit Parser(std::string_view text): text_(text) { }

  MolecularGraph parse();

private:
  [[noreturn]] void fail(SmilesErrorKind kind, const std::string &msg) const {
    throw SmilesError(kind, pos_, msg);
  }
  [[noreturn]] void fail_at(SmilesErrorKind kind, std::size_t at,
                            const std::string &msg) const {
    throw SmilesError(kind, at, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void add_atom(ParsedAtom atom);
  void add_bond(std::size_t a, std::size_t b, std::optional<PendingBond> bond,
                std::size_t position);
  void parse_organic();
  void parse_bracket();
  void parse_ring_closure();

  MolecularGraph build();

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<ParsedAtom> atoms_;
  std::vector<ParsedBond> bonds_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> bond_index_;
  std::optional<std::size_t> prev_;
  std::optional<PendingBond> pending_;
  std::vector<std::size_t> branches_;
  std::map<int, RingOpening> rings_;
  char last_token_ = '\0';
};

void Parser::add_atom(ParsedAtom atom) {
  const std::size_t idx = atoms_.size();
  atoms_.push_back(atom);
  if (prev_)
    add_bond(*prev_, idx, pending_, atom.position);
  pending_.reset();
  prev_ = idx;
  last_token_ = 'a';
}

void Parser::add_bond(std::size_t a, std::size_t b,
                      std::optional<PendingBond> bond, std::size_t position) {
  if (a == b)
    fail_at(SmilesErrorKind::kSyntax, position, "atom bonded to itself");
  auto key = std::minmax(a, b);
  if (bond_index_.count(key) != 0)
    fail_at(SmilesErrorKind::kSyntax, position, "duplicate bond");
  BondClass cls;
  if (bond) {
    cls = bond->cls;
  } else {
    cls = atoms_[a].lowercase && atoms_[b].lowercase ? BondClass::kAromatic
                                                     : BondClass::kSingle;
  }
  bond_index_.emplace(key, bonds_.size());
  bonds_.push_back({ a, b, cls, bond.has_value(), position });
}

void Parser::parse_organic() {
  const std::size_t start = pos_;
  const char c = peek();
  std::string symbol(1, c);
  bool lowercase = false;
  switch (c) {
  case 'C':
    if (peek(1) == 'l')
      symbol = "Cl";
    break;
  case 'B':
    if (peek(1) != 'r')
      fail(SmilesErrorKind::kUnsupportedElement, "boron is not supported");
    symbol = "Br";
    break;
  case 'N':
  case 'O':
  case 'S':
  case 'F':
    break;
  case 'c':
  case 'n':
  case 'o':
  case 's':
    lowercase = true;
    symbol = std::string(1, static_cast<char>(std::toupper(c)));
    break;
  default:
    fail(SmilesErrorKind::kUnsupportedElement,
         std::string("unsupported atom '") + c + "'");
  }
  pos_ += lowercase ? 1 : symbol.size();
  add_atom({ *element_from_symbol(symbol), lowercase, false, -1, start });
}

void Parser::parse_bracket() {
  const std::size_t start = pos_;
  ++pos_; // '['
  if (std::isdigit(static_cast<unsigned char>(peek())))
    fail(SmilesErrorKind::kChargeOrIsotope, "isotopes are not supported");

  std::string symbol;
  bool lowercase = false;
  if (std::isupper(static_cast<unsigned char>(peek()))) {
    symbol = peek();
    ++pos_;
    if (std::islower(static_cast<unsigned char>(peek()))) {
      symbol += peek();
      ++pos_;
    }
  } else if (std::islower(static_cast<unsigned char>(peek()))) {
    lowercase = true;
    symbol = static_cast<char>(std::toupper(peek()));
    ++pos_;
  } else if (peek() == '*') {
    fail(SmilesErrorKind::kUnsupportedElement, "wildcard atoms are not supported");
  } else {
    fail(SmilesErrorKind::kSyntax, "expected element symbol in bracket atom");
  }

  auto element = element_from_symbol(symbol);
  if (!element || symbol == "H")
    fail_at(SmilesErrorKind::kUnsupportedElement, start + 1,
            "unsupported element '" + symbol + "'");
  if (lowercase && !aromatic_capable(*element))
    fail_at(SmilesErrorKind::kUnsupportedElement, start + 1,
            "element cannot be aromatic");

  if (peek() == '@')
    fail(SmilesErrorKind::kStereo, "stereochemistry is not supported");

  int hydrogens = 0;
  if (peek() == 'H') {
    ++pos_;
    hydrogens = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      hydrogens = peek() - '0';
      ++pos_;
    }
  }
  if (peek() == '+' || peek() == '-')
    fail(SmilesErrorKind::kChargeOrIsotope, "charges are not supported");
  if (peek() == ':')
    fail(SmilesErrorKind::kSyntax, "atom classes are not supported");
  if (peek() != ']')
    fail(SmilesErrorKind::kSyntax, "expected ']'");
  ++pos_;
  add_atom({ *element, lowercase, true, hydrogens, start });
}

void Parser::parse_ring_closure() {
  const std::size_t start = pos_;
  int number;
  if (peek() == '%') {
    if (!std::isdigit(static_cast<unsigned char>(peek(1)))
        || !std::isdigit(static_cast<unsigned char>(peek(2))))
      fail(SmilesErrorKind::kSyntax, "'%' must be followed by two digits");
    number = (peek(1) - '0') * 10 + (peek(2) - '0');
    pos_ += 3;
  } else {
    number = peek() - '0';
    ++pos_;
  }
  if (!prev_)
    fail_at(SmilesErrorKind::kSyntax, start, "ring closure without an atom");

  auto it = rings_.find(number);
  if (it == rings_.end()) {
    rings_.emplace(number, RingOpening { *prev_, pending_, start });
    pending_.reset();
    last_token_ = 'r';
    return;
  }

  RingOpening open = it->second;
  rings_.erase(it);
  std::optional<PendingBond> bond = pending_;
  if (open.bond && bond && open.bond->cls != bond->cls)
    fail_at(SmilesErrorKind::kSyntax, start,
            "conflicting bond symbols on ring closure");
  if (!bond)
    bond = open.bond;
  pending_.reset();
  add_bond(open.atom, *prev_, bond, start);
  last_token_ = 'r';
}

MolecularGraph Parser::parse() {
  if (text_.empty())
    fail(SmilesErrorKind::kSyntax, "empty SMILES");

  while (!at_end()) {
    const char c = peek();
    if (static_cast<unsigned char>(c) > 127)
      fail(SmilesErrorKind::kSyntax, "non-ASCII character");
    switch (c) {
    case '(':
      if (!prev_)
        fail(SmilesErrorKind::kSyntax, "branch without a preceding atom");
      if (pending_)
        fail(SmilesErrorKind::kSyntax, "bond symbol before branch");
      branches_.push_back(*prev_);
      ++pos_;
      last_token_ = '(';
      break;
    case ')':
      if (branches_.empty())
        fail(SmilesErrorKind::kUnbalancedParenthesis, "unmatched ')'");
      if (last_token_ == '(')
        fail(SmilesErrorKind::kSyntax, "empty branch");
      if (pending_)
        fail(SmilesErrorKind::kSyntax, "dangling bond symbol");
      prev_ = branches_.back();
      branches_.pop_back();
      ++pos_;
      last_token_ = ')';
      break;
    case '-':
    case '=':
    case '#':
    case ':':
      if (!prev_ || pending_)
        fail(SmilesErrorKind::kSyntax, "unexpected bond symbol");
      pending_ = PendingBond { c == '-'   ? BondClass::kSingle
                               : c == '=' ? BondClass::kDouble
                               : c == '#' ? BondClass::kTriple
                                          : BondClass::kAromatic,
                               pos_ };
      ++pos_;
      last_token_ = 'b';
      break;
    case '/':
    case '\\':
      fail(SmilesErrorKind::kStereo, "bond stereo marks are not supported");
    case '.':
      if (!prev_ || pending_ || !branches_.empty())
        fail(SmilesErrorKind::kSyntax, "unexpected '.'");
      prev_.reset();
      ++pos_;
      last_token_ = '.';
      break;
    case '[':
      parse_bracket();
      break;
    case '%':
      parse_ring_closure();
      break;
    case '*':
      fail(SmilesErrorKind::kUnsupportedElement,
           "wildcard atoms are not supported");
    default:
      if (std::isdigit(static_cast<unsigned char>(c))) {
        parse_ring_closure();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        parse_organic();
      } else {
        fail(SmilesErrorKind::kSyntax,
             std::string("unexpected character '") + c + "'");
      }
    }
  }

  if (pending_)
    fail_at(SmilesErrorKind::kSyntax, pending_->position,
            "dangling bond symbol");
  if (!branches_.empty())
    fail(SmilesErrorKind::kUnbalancedParenthesis, "unclosed '('");
  if (!rings_.empty()) {
    const auto &[number, open] = *rings_.begin();
    fail_at(SmilesErrorKind::kUnclosedRing, open.position,
            "ring bond " + std::to_string(number) + " is never closed");
  }
  if (last_token_ == '.')
    fail(SmilesErrorKind::kSyntax, "trailing '.'");
  return build();
}

MolecularGraph Parser::build() {
  std::vector<Element> elements;
  elements.reserve(atoms_.size());
  for (const auto &a: atoms_)
    elements.push_back(a.element);
  MolecularGraph g(std::move(elements));
  SimpleGraph topology(atoms_.size());
  for (const auto &b: bonds_) {
    g.set_bond(b.a, b.b, b.cls);
    topology.add_edge(b.a, b.b);
  }

  // Implicit aromatic bonds outside rings join separate aromatic systems.
  const auto cyclic = cyclic_edges(topology);
  for (const auto &b: bonds_) {
    if (b.cls != BondClass::kAromatic || b.explicit_symbol)
      continue;
    if (!cyclic[static_cast<std::size_t>(topology.edge_id(b.a, b.b))])
      g.set_bond(b.a, b.b, BondClass::kSingle);
  }

  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const ParsedAtom &a = atoms_[i];
    if (a.lowercase && !g.is_aromatic_atom(i))
      fail_at(SmilesErrorKind::kAromaticity, a.position,
              "aromatic atom outside an aromatic ring");
    if (!a.bracket)
      continue;
    if (g.is_aromatic_atom(i)) {
      g.set_implicit_h(i, a.hydrogens);
      continue;
    }
    const int sum = g.bond_order_sum_x2(i) / 2;
    auto v = smallest_valence_at_least(a.element, sum);
    if (!v || *v - sum != a.hydrogens)
      fail_at(SmilesErrorKind::kHydrogenCount, a.position,
              "hydrogen count does not match the default valence");
  }

  ValenceReport report = check_valence(g);
  if (report.valid)
    for (std::size_t i = 0; i < g.size(); ++i)
      g.set_implicit_h(i, report.implicit_h[i]);
  return g;
}
} // namespace

MolecularGraph parse_smiles(std::string_view text) {
  return Parser(text).parse();
}

} // namespace molguide
