#pragma once

#include "linext/error.hpp"
#include "linext/poset.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace linext {

/// Smallest known-optimal witnesses for 1 <= n <= 12.
namespace atlas {

inline constexpr std::size_t kMaxN = 12;

/// Minimal poset size for exactly n linear extensions, n = 1..12.
inline constexpr std::array<std::size_t, kMaxN> kLambda = {0, 2, 3, 4, 4, 3, 5, 4, 5, 5, 5, 4};

inline bool contains(std::size_t n) { return n >= 1 && n <= kMaxN; }

inline std::size_t lambda(std::size_t n) {
  if (!contains(n)) throw InputError("atlas covers 1 <= n <= 12, got " + std::to_string(n));
  return kLambda[n - 1];
}

/// Cover lists of the witnesses. The N poset is 0<1, 2<3, 2<1.
inline CoverList witness_covers(std::size_t n) {
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  switch (n) {
    case 1: return {0, {}};
    case 2: return {2, {}};
    case 3: return {3, Pairs{{0, 1}}};
    case 4: return {4, Pairs{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    case 5: return {4, Pairs{{0, 1}, {2, 1}, {2, 3}}};
    case 6: return {3, {}};
    // N with a new minimum under the element that has two upper covers.
    case 7: return {5, Pairs{{0, 1}, {2, 1}, {2, 3}, {4, 2}}};
    case 8: return {4, Pairs{{0, 3}, {1, 3}}};
    // N with a new minimum under the other bottom element.
    case 9: return {5, Pairs{{0, 1}, {2, 1}, {2, 3}, {4, 0}}};
    case 10: return {5, Pairs{{0, 3}, {1, 3}, {3, 4}}};
    // gadget_q(1, 3, 5): chain 0<1<2, a=3 above 0, b=4 below 2.
    case 11: return {5, Pairs{{0, 1}, {1, 2}, {0, 3}, {4, 2}}};
    case 12: return {4, Pairs{{0, 1}}};
    default:
      throw InputError("atlas covers 1 <= n <= 12, got " + std::to_string(n));
  }
}

inline Poset witness(std::size_t n) { return from_cover_pairs(witness_covers(n)); }

}  // namespace atlas
}  // namespace linext
