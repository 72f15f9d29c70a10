#include "linext/canonical.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace linext {
namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Poset n_poset() { return from_cover_pairs(4, Pairs{{0, 1}, {2, 3}, {2, 1}}); }

TEST(CanonicalKey, ChainDiffersFromAntichain) {
  EXPECT_NE(canonical_key(chain(3)), canonical_key(antichain(3)));
}

TEST(CanonicalKey, NPosetInvariantUnderAllRelabelings) {
  const Poset n = n_poset();
  const CanonicalKey key = canonical_key(n);
  std::vector<std::size_t> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    EXPECT_EQ(canonical_key(relabel(n, perm)), key);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(CanonicalKey, DirectSumIsSymmetric) {
  const Poset p = n_poset();
  const Poset q = ordinal_sum(antichain(2), chain(1));
  EXPECT_EQ(canonical_key(direct_sum(p, q)), canonical_key(direct_sum(q, p)));
}

TEST(CanonicalKey, KeysOrderBySizeFirst) {
  EXPECT_LT(canonical_key(antichain(3)), canonical_key(chain(4)));
  EXPECT_LT(canonical_key(Poset{}), canonical_key(chain(1)));
}

TEST(CanonicalKey, FormDecodesToAnIsomorphicPoset) {
  for (std::size_t m = 0; m <= 5; ++m) {
    for (const auto& p : oracle::all_labeled_posets(m)) {
      const Poset form = canonical_form(p);
      ASSERT_TRUE(is_strict_partial_order(form));
      ASSERT_TRUE(oracle::isomorphic(form, p));
      ASSERT_EQ(canonical_key(form), canonical_key(p));
    }
  }
}

// Keys agree exactly when the brute-force minimum over all relabelings does.
TEST(CanonicalKey, MatchesBruteForceClassesThroughSizeFive) {
  for (std::size_t m = 0; m <= 5; ++m) {
    std::map<std::uint64_t, CanonicalKey> by_code;
    std::set<CanonicalKey> keys;
    for (const auto& p : oracle::all_labeled_posets(m)) {
      const auto code = oracle::brute_canonical_code(p);
      const auto key = canonical_key(p);
      auto [it, inserted] = by_code.emplace(code, key);
      if (!inserted) ASSERT_EQ(it->second, key);
      keys.insert(key);
    }
    EXPECT_EQ(keys.size(), by_code.size()) << "size " << m;
  }
}

TEST(CanonicalKey, InvariantUnderRelabelingOfEveryPosetUpToFive) {
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto posets = oracle::all_labeled_posets(m);
    std::vector<std::size_t> perm(m);
    for (std::size_t k = 0; k < posets.size(); k += 7) {
      const auto key = canonical_key(posets[k]);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        ASSERT_EQ(canonical_key(relabel(posets[k], perm)), key);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(CanonicalKey, HandlesLargeSymmetricPosets) {
  // Twin pruning keeps wide antichains cheap.
  EXPECT_EQ(canonical_key(antichain(12)), canonical_key(antichain(12)));
  const Poset crown = from_cover_pairs(
      6, Pairs{{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 3}});
  std::vector<std::size_t> perm = {5, 3, 4, 0, 2, 1};
  EXPECT_EQ(canonical_key(relabel(crown, perm)), canonical_key(crown));
}

}  // namespace
}  // namespace linext
