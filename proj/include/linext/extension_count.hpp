#pragma once

#include "linext/arith.hpp"
#include "linext/error.hpp"
#include "linext/poset.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace linext {

struct CountLimits {
  /// Largest poset the permutation oracle accepts.
  std::size_t brute_max_size = 10;
  /// Largest number of order ideals the lattice DP may visit.
  std::size_t dp_max_ideals = std::size_t{1} << 24;
};

/// Counts linear extensions straight from the definition: every permutation
/// of the elements is tested against every relation pair.
inline ExtensionCount count_brute(const Poset& p, const CountLimits& limits = {}) {
  const std::size_t n = p.size();
  if (n > limits.brute_max_size) {
    throw Infeasible("oracle-infeasible: brute force is capped at " +
                     std::to_string(limits.brute_max_size) + " elements, poset has " +
                     std::to_string(n));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (p.less(u, v)) pairs.emplace_back(u, v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> position(n);
  std::uint64_t count = 0;
  do {
    for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
    bool ok = true;
    for (auto [u, v] : pairs) {
      if (position[u] > position[v]) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

namespace detail {

template <class Key>
struct IdealKeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t k = 0; k < key.size(); ++k) {
      h ^= key[k] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

template <class Key>
ExtensionCount ideal_lattice_count(const Poset& p, std::size_t max_ideals, Key empty) {
  using Word = Poset::Word;
  constexpr std::size_t kBits = Poset::kWordBits;
  const std::size_t n = p.size();
  const std::size_t words = p.words_per_row();
  const std::vector<Word> below = p.below_rows();

  auto contains_lower_set = [&](const Key& ideal, std::size_t x) {
    for (std::size_t k = 0; k < words; ++k) {
      if ((below[x * words + k] & ~ideal[k]) != 0) return false;
    }
    return true;
  };

  // Level k holds the ideals with k elements, each mapped to the number of
  // maximal chains from the empty ideal up to it.
  std::unordered_map<Key, ExtensionCount, IdealKeyHash<Key>> level;
  level.emplace(empty, 1);
  std::size_t visited = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::unordered_map<Key, ExtensionCount, IdealKeyHash<Key>> next;
    for (const auto& [ideal, chains] : level) {
      for (std::size_t x = 0; x < n; ++x) {
        if ((ideal[x / kBits] >> (x % kBits)) & 1U) continue;
        if (!contains_lower_set(ideal, x)) continue;
        Key grown = ideal;
        grown[x / kBits] |= Word{1} << (x % kBits);
        next[grown] += chains;
      }
    }
    visited += next.size();
    if (visited > max_ideals) {
      throw Infeasible("counter-infeasible: order ideal lattice exceeds " +
                       std::to_string(max_ideals) + " ideals");
    }
    level = std::move(next);
  }
  // Only the full set survives the last level.
  return level.begin()->second;
}

template <std::size_t W>
ExtensionCount ideal_lattice_count_fixed(const Poset& p, std::size_t max_ideals) {
  return ideal_lattice_count(p, max_ideals, std::array<Poset::Word, W>{});
}

}  // namespace detail

/// Counts linear extensions as maximal chains in the lattice of order ideals.
inline ExtensionCount count_ideal_dp(const Poset& p, const CountLimits& limits = {}) {
  const std::size_t words = p.words_per_row();
  if (words <= 1) return detail::ideal_lattice_count_fixed<1>(p, limits.dp_max_ideals);
  if (words <= 2) return detail::ideal_lattice_count_fixed<2>(p, limits.dp_max_ideals);
  if (words <= 4) return detail::ideal_lattice_count_fixed<4>(p, limits.dp_max_ideals);
  if (words <= 8) return detail::ideal_lattice_count_fixed<8>(p, limits.dp_max_ideals);
  return detail::ideal_lattice_count(p, limits.dp_max_ideals, std::vector<Poset::Word>(words, 0));
}

enum class CountMethod { kAuto, kBrute, kIdealDp };

/// Brute force up to `auto_brute_max` elements, ideal DP beyond.
inline ExtensionCount count_extensions(const Poset& p, CountMethod method = CountMethod::kAuto,
                                       const CountLimits& limits = {},
                                       std::size_t auto_brute_max = 8) {
  switch (method) {
    case CountMethod::kBrute:
      return count_brute(p, limits);
    case CountMethod::kIdealDp:
      return count_ideal_dp(p, limits);
    case CountMethod::kAuto:
      break;
  }
  return p.size() <= auto_brute_max ? count_brute(p, limits) : count_ideal_dp(p, limits);
}

}  // namespace linext
