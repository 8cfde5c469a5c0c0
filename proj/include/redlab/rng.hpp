#pragma once

// Small deterministic sampling helpers. std::uniform_int_distribution is
// implementation-defined, so anything that must reproduce byte-identical
// output across toolchains goes through these instead.

#include <cstdint>
#include <random>
#include <vector>

namespace redlab {

using Rng = std::mt19937_64;

/// Uniform draw from [0, bound). bound >= 1.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t bound) {
  // Rejection sampling over the smallest covering power-of-two range.
  const std::uint64_t mask = bound <= 1 ? 0 : ~std::uint64_t{0} >> __builtin_clzll(bound - 1);
  for (;;) {
    const std::uint64_t draw = rng() & mask;
    if (draw < bound) return draw;
  }
}

/// Uniform draw from [lo, hi] inclusive.
inline std::int64_t rand_range(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rand_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

inline bool rand_chance(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  // 53-bit uniform in [0, 1).
  return (rng() >> 11) * 0x1.0p-53 < p;
}

template <typename T>
void shuffle_in_place(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rand_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

/// Random permutation of [0, n).
inline std::vector<std::uint32_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  shuffle_in_place(perm, rng);
  return perm;
}

}  // namespace redlab
