#pragma once

// Seeded randomness that is reproducible across standard libraries:
// std::mt19937_64 output is fixed by the standard, the distributions are not.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace cover {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

/// Uniform random permutation of 0..n-1 (Fisher-Yates).
inline std::vector<std::uint32_t> random_permutation(std::mt19937_64& rng, std::uint32_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (std::uint32_t j = n; j > 1; --j) {
    const auto pick = static_cast<std::uint32_t>(uniform_below(rng, j));
    std::swap(p[j - 1], p[pick]);
  }
  return p;
}

}  // namespace cover
