//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_COMMON_HASH_HPP_
#define MOLGUIDE_COMMON_HASH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace molguide {

/// Incremental 64-bit FNV-1a. Multi-byte integers are fed little-endian so
/// that hashes are identical on every host.
class Fnv1a64 {
public:
  static constexpr std::uint64_t kOffsetBasis = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

  constexpr void update(std::uint8_t byte) noexcept {
    state_ ^= byte;
    state_ *= kPrime;
  }

  void update(std::span<const std::byte> bytes) noexcept {
    for (std::byte b: bytes)
      update(static_cast<std::uint8_t>(b));
  }

  void update(std::string_view text) noexcept {
    for (char c: text)
      update(static_cast<std::uint8_t>(c));
  }

  constexpr void update_u64(std::uint64_t value) noexcept {
    for (int i = 0; i < 8; ++i)
      update(static_cast<std::uint8_t>(value >> (8 * i)));
  }

  constexpr void update_u32(std::uint32_t value) noexcept {
    for (int i = 0; i < 4; ++i)
      update(static_cast<std::uint8_t>(value >> (8 * i)));
  }

  constexpr std::uint64_t digest() const noexcept { return state_; }

private:
  std::uint64_t state_ = kOffsetBasis;
};

} // namespace molguide

#endif // MOLGUIDE_COMMON_HASH_HPP_
