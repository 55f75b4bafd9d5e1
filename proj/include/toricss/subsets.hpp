#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace toricss {

// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(out);
}

// The index-th k-subset of {0..n-1} in lexicographic order.
inline std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t index) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (;; ++next) {
      const std::uint64_t with_next = binomial(n - next - 1, k - slot - 1);
      if (index < with_next) break;
      index -= with_next;
    }
    out.push_back(next++);
  }
  return out;
}

// Advances to the lexicographically next k-subset; false after the last one.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace toricss
