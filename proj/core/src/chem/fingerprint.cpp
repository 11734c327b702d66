//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/chem/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "molguide/common/error.hpp"
#include "molguide/common/hash.hpp"
#include "molguide/common/parallel.hpp"
#include "molguide/molgraph/rings.hpp"
#include "molguide/molgraph/simple_graph.hpp"
#include "molguide/molgraph/valence.hpp"

namespace molguide {
namespace {
void check_width(std::size_t width) {
  if (width < 64 || !std::has_single_bit(width))
    throw UsageError("fingerprint width must be a power of two >= 64, got "
                     + std::to_string(width));
}

int hex_value(char c) {
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}
} // namespace

Fingerprint::Fingerprint(std::size_t width, int radius)
    : width_(width), radius_(radius), words_(width / 64, 0) {
  check_width(width);
  if (radius < 0)
    throw UsageError("fingerprint radius must be nonnegative");
}

void Fingerprint::set(std::size_t bit) {
  std::uint64_t &w = words_[bit >> 6];
  const std::uint64_t mask = std::uint64_t { 1 } << (bit & 63);
  if (!(w & mask)) {
    w |= mask;
    ++popcount_;
  }
}

std::vector<std::size_t> Fingerprint::set_bits() const {
  std::vector<std::size_t> out;
  out.reserve(popcount_);
  for (std::size_t i = 0; i < width_; ++i)
    if (test(i))
      out.push_back(i);
  return out;
}

Fingerprint morgan_fingerprint(const MolecularGraph &g, int radius,
                               std::size_t width) {
  Fingerprint fp(width, radius);
  const ValenceReport report = check_valence(g);
  if (!report.valid)
    throw DataError("cannot fingerprint a molecule that fails valence checks");

  const std::size_t n = g.size();
  const SimpleGraph sg = SimpleGraph::from_molecule(g);
  const std::vector<bool> cyclic = cyclic_edges(sg);
  std::vector<bool> in_ring(n, false);
  for (std::size_t e = 0; e < sg.edge_count(); ++e)
    if (cyclic[e])
      in_ring[sg.edges()[e].first] = in_ring[sg.edges()[e].second] = true;

  std::vector<std::uint64_t> codes(n);
  for (std::size_t i = 0; i < n; ++i) {
    Fnv1a64 h;
    h.update(static_cast<std::uint8_t>(element_index(g.atom(i))));
    h.update_u32(static_cast<std::uint32_t>(sg.neighbors(i).size()));
    h.update_u32(static_cast<std::uint32_t>(report.implicit_h[i]));
    h.update(static_cast<std::uint8_t>(in_ring[i]));
    codes[i] = h.digest();
  }

  const auto fold = [&](std::uint64_t code) { fp.set(code & (width - 1)); };
  for (std::uint64_t c: codes)
    fold(c);

  std::vector<std::pair<std::uint8_t, std::uint64_t>> env;
  std::vector<std::uint64_t> next(n);
  for (int round = 0; round < radius; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      env.clear();
      for (std::size_t j: sg.neighbors(i))
        env.emplace_back(static_cast<std::uint8_t>(bond_index(g.bond(i, j))),
                         codes[j]);
      std::sort(env.begin(), env.end());
      Fnv1a64 h;
      h.update_u32(static_cast<std::uint32_t>(round + 1));
      h.update_u64(codes[i]);
      for (auto [b, c]: env) {
        h.update(b);
        h.update_u64(c);
      }
      next[i] = h.digest();
    }
    codes.swap(next);
    for (std::uint64_t c: codes)
      fold(c);
  }
  return fp;
}

std::vector<Fingerprint> morgan_fingerprints(
    const std::vector<MolecularGraph> &mols, int radius, std::size_t width,
    std::size_t workers) {
  std::vector<Fingerprint> out(mols.size());
  parallel_for(
      mols.size(),
      [&](std::size_t i) { out[i] = morgan_fingerprint(mols[i], radius, width); },
      workers);
  return out;
}

std::string to_hex(const Fingerprint &fp) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(fp.width() / 4);
  for (std::size_t nib = fp.width() / 4; nib-- > 0;) {
    int v = 0;
    for (int b = 3; b >= 0; --b)
      v = (v << 1) | static_cast<int>(fp.test(nib * 4 + b));
    out.push_back(kDigits[v]);
  }
  return out;
}

Fingerprint from_hex(std::string_view hex, int radius, std::size_t width) {
  Fingerprint fp(width, radius);
  if (hex.size() != width / 4)
    throw DataError("hex fingerprint has " + std::to_string(hex.size())
                    + " digits, expected " + std::to_string(width / 4));
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const int v = hex_value(hex[k]);
    if (v < 0)
      throw DataError("invalid hex digit in fingerprint");
    const std::size_t nib = hex.size() - 1 - k;
    for (int b = 0; b < 4; ++b)
      if (v >> b & 1)
        fp.set(nib * 4 + b);
  }
  return fp;
}

std::string fingerprint_header(int radius, std::size_t width) {
  return "# fingerprint radius=" + std::to_string(radius)
         + " width=" + std::to_string(width);
}

void write_fingerprints(std::ostream &os, const std::vector<Fingerprint> &fps,
                        const std::vector<std::string> &labels) {
  if (fps.empty())
    throw UsageError("no fingerprints to write");
  if (labels.size() != fps.size())
    throw UsageError("label count does not match fingerprint count");
  os << fingerprint_header(fps[0].radius(), fps[0].width()) << '\n';
  for (std::size_t i = 0; i < fps.size(); ++i)
    os << to_hex(fps[i]) << '\t' << labels[i] << '\n';
}

std::vector<Fingerprint> read_fingerprints(std::istream &is,
                                           std::vector<std::string> *labels) {
  std::vector<Fingerprint> out;
  int radius = -1;
  std::size_t width = 0;
  for (std::string line; std::getline(is, line);) {
    if (line.empty())
      continue;
    if (line[0] == '#') {
      if (line.rfind("# fingerprint ", 0) == 0) {
        std::istringstream ss(line.substr(14));
        std::string r, w;
        ss >> r >> w;
        if (r.rfind("radius=", 0) != 0 || w.rfind("width=", 0) != 0)
          throw DataError("malformed fingerprint header: " + line);
        radius = std::stoi(r.substr(7));
        width = std::stoul(w.substr(6));
      }
      continue;
    }
    if (radius < 0)
      throw DataError("fingerprint data before header");
    const std::size_t tab = line.find('\t');
    out.push_back(from_hex(line.substr(0, tab), radius, width));
    if (labels)
      labels->push_back(tab == std::string::npos ? "" : line.substr(tab + 1));
  }
  return out;
}

} // namespace molguide
