#pragma once

// Test-only reference implementations. Nothing here shares code with the
// canonical-key search or the natural-labeling enumerator they check.

#include "linext/poset.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace linext::oracle {

/// Relation bit string of p under the relabeling x -> perm[x].
inline std::uint64_t encode(const Poset& p, const std::vector<std::size_t>& perm) {
  std::uint64_t code = 0;
  const std::size_t n = p.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (p.less(u, v)) code |= std::uint64_t{1} << (perm[u] * n + perm[v]);
  return code;
}

/// Minimum encoding over all n! relabelings. n <= 8.
inline std::uint64_t brute_canonical_code(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, encode(p, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Every labeled poset on m elements: each unordered pair is assigned one
/// of {u<v, v<u, incomparable} and transitive results are kept.
inline std::vector<Poset> all_labeled_posets(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
  std::vector<int> state(pairs.size(), 0);
  std::vector<Poset> out;
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
  while (true) {
    for (auto& row : rel) std::fill(row.begin(), row.end(), false);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [u, v] = pairs[k];
      if (state[k] == 1) rel[u][v] = true;
      if (state[k] == 2) rel[v][u] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < m && transitive; ++a)
      for (std::size_t b = 0; b < m && transitive; ++b)
        if (rel[a][b])
          for (std::size_t c = 0; c < m; ++c)
            if (rel[b][c] && !rel[a][c]) {
              transitive = false;
              break;
            }
    if (transitive) {
      std::vector<std::pair<std::size_t, std::size_t>> covers;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (rel[a][b]) covers.emplace_back(a, b);
      out.push_back(from_cover_pairs(m, covers));
    }
    std::size_t k = 0;
    while (k < state.size() && state[k] == 2) state[k++] = 0;
    if (k == state.size()) break;
    ++state[k];
  }
  return out;
}

/// Number of isomorphism classes among the labeled posets on m elements.
inline std::size_t brute_class_count(std::size_t m) {
  std::set<std::uint64_t> codes;
  for (const auto& p : all_labeled_posets(m)) codes.insert(brute_canonical_code(p));
  return codes.size();
}

/// Backtracking isomorphism test.
inline bool isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n || p.relation_pairs() != q.relation_pairs()) return false;
  auto degrees = [](const Poset& x, std::size_t v) {
    std::size_t down = 0;
    for (std::size_t u = 0; u < x.size(); ++u) down += x.less(u, v) ? 1 : 0;
    return std::pair{down, x.up_degree(v)};
  };
  std::vector<std::size_t> map(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || degrees(p, v) != degrees(q, w)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        ok = p.less(u, v) == q.less(map[u], w) && p.less(v, u) == q.less(w, map[u]);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

/// Class representatives of size m grown from those of size m-1: every
/// poset arises by adding a maximal element whose lower set is an order
/// ideal. Duplicates are removed with pairwise isomorphism tests inside
/// buckets of a cheap invariant.
inline std::vector<std::vector<Poset>> classes_by_growth(std::size_t max_m) {
  std::vector<std::vector<Poset>> levels{{Poset{}}};
  using Invariant = std::tuple<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;
  for (std::size_t m = 1; m <= max_m; ++m) {
    std::map<Invariant, std::vector<Poset>> buckets;
    std::vector<Poset> reps;
    for (const auto& base : levels.back()) {
      const std::size_t k = base.size();
      // Order ideals of base by brute force over subsets.
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        bool ideal = true;
        for (std::size_t v = 0; v < k && ideal; ++v) {
          if (!((mask >> v) & 1U)) continue;
          for (std::size_t u = 0; u < k; ++u)
            if (base.less(u, v) && !((mask >> u) & 1U)) ideal = false;
        }
        if (!ideal) continue;
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (std::size_t u = 0; u < k; ++u)
          for (std::size_t v = 0; v < k; ++v)
            if (base.less(u, v)) rel.emplace_back(u, v);
        for (std::size_t u = 0; u < k; ++u)
          if ((mask >> u) & 1U) rel.emplace_back(u, k);
        Poset grown = from_cover_pairs(k + 1, rel);
        std::vector<std::pair<std::size_t, std::size_t>> degs;
        for (std::size_t v = 0; v <= k; ++v) {
          std::size_t down = 0;
          for (std::size_t u = 0; u <= k; ++u) down += grown.less(u, v) ? 1 : 0;
          degs.emplace_back(down, grown.up_degree(v));
        }
        std::sort(degs.begin(), degs.end());
        auto& bucket = buckets[Invariant{grown.relation_pairs(), degs}];
        bool seen = false;
        for (const auto& other : bucket) {
          if (isomorphic(grown, other)) {
            seen = true;
            break;
          }
        }
        if (!seen) {
          bucket.push_back(grown);
          reps.push_back(grown);
        }
      }
    }
    levels.push_back(std::move(reps));
  }
  return levels;
}

}  // namespace linext::oracle
