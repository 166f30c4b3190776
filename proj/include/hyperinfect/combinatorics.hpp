#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace hyperinfect {

/// C(n, k), saturating at UINT64_MAX instead of overflowing.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // r * num / i stays exact because r * num is divisible by i
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / i;
  }
  return r;
}

/// Advances c (strictly increasing, values < n) to the next k-combination in
/// lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
  const auto k = static_cast<std::uint32_t>(c.size());
  std::uint32_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// The rank-th k-combination of {0..n-1} in lexicographic order.
inline std::vector<std::uint32_t> unrank_combination(std::uint64_t rank, std::uint32_t n,
                                                     std::uint32_t k) {
  std::vector<std::uint32_t> c;
  c.reserve(k);
  std::uint32_t x = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    // skip first elements whose block of completions lies before rank
    while (true) {
      const std::uint64_t block = binomial(n - x - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    c.push_back(x++);
  }
  return c;
}

}  // namespace hyperinfect
