#pragma once

// Test-only reference computations. None of these call into the library's
// counting or construction code.

#include <cstdint>
#include <vector>

namespace oracle {

// Every nonempty subset of [n] (bitmask), kept when it is a singleton or an
// arithmetic progression with difference q, and p * min F >= |F|. n <= 20.
inline std::int64_t sr_subsets(int n, std::int64_t p, std::int64_t q) {
  std::int64_t count = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::int64_t> f;
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) f.push_back(i + 1);
    }
    bool progression = true;
    for (std::size_t i = 1; i < f.size(); ++i) progression = progression && (f[i] - f[i - 1] == q);
    if (progression && p * f.front() >= static_cast<std::int64_t>(f.size())) ++count;
  }
  return count;
}

// Counts progressions by their largest element: F ends at m, has length L,
// min = m - (L - 1) q. Independent traversal from the library's (start, length) order.
inline std::int64_t sr_by_max(std::int64_t n, std::int64_t p, std::int64_t q) {
  std::int64_t count = 0;
  for (std::int64_t m = 1; m <= n; ++m) {
    for (std::int64_t len = 1;; ++len) {
      const std::int64_t lo = m - (len - 1) * q;
      if (lo < 1 || p * lo < len) break;
      ++count;
    }
  }
  return count;
}

// Intervals [a, b] of [n] with p * a >= b - a + 1.
inline std::int64_t sr_intervals(std::int64_t n, std::int64_t p) {
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= n; ++a) {
    for (std::int64_t b = a; b <= n; ++b) {
      if (p * a >= b - a + 1) ++count;
    }
  }
  return count;
}

// Complete p-partite graph with round-robin part assignment; counts
// cross-part pairs directly.
inline std::int64_t turan_pairs(std::int64_t n, std::int64_t p) {
  std::int64_t count = 0;
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = u + 1; v < n; ++v) {
      if (u % p != v % p) ++count;
    }
  }
  return count;
}

// Positions 1..N numbered cyclically 1..q; how many carry the number 1.
inline std::int64_t numbered_one(std::int64_t n, std::int64_t q) {
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    if ((i - 1) % q == 0) ++count;
  }
  return count;
}

}  // namespace oracle
