//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_COMMON_RNG_HPP_
#define MOLGUIDE_COMMON_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace molguide {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded random source. Wraps the standard 64-bit Mersenne twister, whose
/// output sequence is fixed by the standard; the derived distributions are
/// implemented here rather than taken from <random> because the latter are
/// implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed): engine_(splitmix64(seed)) { }

  /// Independent stream for the index-th work item of a run seeded by root.
  static Rng stream(std::uint64_t root, std::uint64_t index) {
    return Rng(splitmix64(root) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
               below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double normal();

  /// Draws an index with probability proportional to weights[i].
  std::size_t categorical(std::span<const double> weights);

  template <class It>
  void shuffle(It first, It last) {
    auto n = last - first;
    for (auto i = n - 1; i > 0; --i) {
      auto j = static_cast<decltype(i)>(below(static_cast<std::uint64_t>(i) + 1));
      using std::swap;
      swap(first[i], first[j]);
    }
  }

private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

} // namespace molguide

#endif // MOLGUIDE_COMMON_RNG_HPP_
