//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_CHEM_FINGERPRINT_HPP_
#define MOLGUIDE_CHEM_FINGERPRINT_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "molguide/molgraph/molecular_graph.hpp"

namespace molguide {

class Fingerprint {
public:
  Fingerprint() = default;
  /// Empty fingerprint; width must be a power of two >= 64.
  Fingerprint(std::size_t width, int radius);

  std::size_t width() const noexcept { return width_; }
  int radius() const noexcept { return radius_; }
  std::size_t popcount() const noexcept { return popcount_; }

  bool test(std::size_t bit) const {
    return (words_[bit >> 6] >> (bit & 63)) & 1u;
  }
  void set(std::size_t bit);
  std::vector<std::size_t> set_bits() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;

private:
  std::size_t width_ = 0;
  int radius_ = 0;
  std::size_t popcount_ = 0;
  std::vector<std::uint64_t> words_;
};

inline constexpr int kScreeningRadius = 2;
inline constexpr std::size_t kScreeningWidth = 2048;
inline constexpr int kClusteringRadius = 10;
inline constexpr std::size_t kClusteringWidth = 2048;

struct FingerprintParams {
  int radius = kScreeningRadius;
  std::size_t width = kScreeningWidth;
};

inline constexpr FingerprintParams kScreeningFingerprint { kScreeningRadius,
                                                           kScreeningWidth };
inline constexpr FingerprintParams kClusteringFingerprint { kClusteringRadius,
                                                            kClusteringWidth };

/// Circular neighborhood fingerprint. Atom codes start from an FNV-1a hash of
/// (element, heavy degree, implicit H, in-ring); each round rehashes the own
/// code with the sorted (bond class, neighbor code) list. Codes from every
/// round fold into the bit vector modulo width. Throws DataError for graphs
/// that fail check_valence().
Fingerprint morgan_fingerprint(const MolecularGraph &g, int radius,
                               std::size_t width);

std::vector<Fingerprint> morgan_fingerprints(
    const std::vector<MolecularGraph> &mols, int radius, std::size_t width,
    std::size_t workers = 0);

/// width / 4 hex digits, most significant bit first.
std::string to_hex(const Fingerprint &fp);
Fingerprint from_hex(std::string_view hex, int radius, std::size_t width);

/// "# fingerprint radius=R width=W"
std::string fingerprint_header(int radius, std::size_t width);

/// Writes the header line followed by one "hex<TAB>label" line per entry.
void write_fingerprints(std::ostream &os, const std::vector<Fingerprint> &fps,
                        const std::vector<std::string> &labels);
/// Reads a stream produced by write_fingerprints(); other '#' lines are
/// skipped.
std::vector<Fingerprint> read_fingerprints(std::istream &is,
                                           std::vector<std::string> *labels
                                           = nullptr);

} // namespace molguide

#endif // MOLGUIDE_CHEM_FINGERPRINT_HPP_
