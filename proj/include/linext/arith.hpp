#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace linext {

/// Exact, unbounded count of linear extensions.
using ExtensionCount = boost::multiprecision::cpp_int;

/// Largest r with r*r <= n.
constexpr std::uint64_t floor_sqrt(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t lo = 1, hi = std::uint64_t{1} << 32;
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid <= n / mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// Smallest r with r*r >= n.
constexpr std::uint64_t ceil_sqrt(std::uint64_t n) {
  std::uint64_t r = floor_sqrt(n);
  return r * r == n ? r : r + 1;
}

/// floor(2 * sqrt(n)), computed exactly as floor(sqrt(4n)).
constexpr std::uint64_t floor_two_sqrt(std::uint64_t n) { return floor_sqrt(4 * n); }

/// n choose k by the multiplicative formula; every intermediate division is exact.
inline ExtensionCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  ExtensionCount result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace linext
