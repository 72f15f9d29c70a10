#include "linext/arith.hpp"
#include "linext/atlas.hpp"
#include "linext/extension_count.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace linext {
namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Poset n_poset() { return from_cover_pairs(4, Pairs{{0, 1}, {2, 3}, {2, 1}}); }

const std::vector<std::vector<Poset>>& classes() {
  static const auto levels = oracle::classes_by_growth(6);
  return levels;
}

TEST(Binomial, SmallValuesAndSymmetry) {
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(30, 12), binomial(30, 18));
  EXPECT_EQ(binomial(80, 40).str(), "107507208733336176461620");
}

TEST(Sqrt, FloorAndCeil) {
  EXPECT_EQ(floor_sqrt(0), 0u);
  EXPECT_EQ(floor_sqrt(15), 3u);
  EXPECT_EQ(floor_sqrt(16), 4u);
  EXPECT_EQ(ceil_sqrt(16), 4u);
  EXPECT_EQ(ceil_sqrt(17), 5u);
  EXPECT_EQ(floor_sqrt(999'999'999'999ULL), 999'999u);
  for (std::uint64_t n = 1; n <= 12; ++n) {
    static constexpr std::uint64_t row[] = {2, 2, 3, 4, 4, 4, 5, 5, 6, 6, 6, 6};
    EXPECT_EQ(floor_two_sqrt(n), row[n - 1]);
  }
}

TEST(CountBrute, DefinitionalExamples) {
  EXPECT_EQ(count_brute(chain(5)), 1);
  EXPECT_EQ(count_brute(antichain(3)), 6);
  EXPECT_EQ(count_brute(n_poset()), 5);
  EXPECT_EQ(count_brute(Poset{}), 1);
}

TEST(CountBrute, RefusesBeyondCap) {
  EXPECT_THROW(count_brute(chain(11)), Infeasible);
  EXPECT_EQ(count_brute(chain(11), CountLimits{11}), 1);
}

TEST(CountIdealDp, AtlasAndChainPlusOne) {
  EXPECT_EQ(count_ideal_dp(atlas::witness(7)), 7);
  EXPECT_EQ(count_ideal_dp(direct_sum(chain(8), chain(1))), 9);
  EXPECT_EQ(count_ideal_dp(Poset{}), 1);
}

TEST(CountIdealDp, EveryAtlasWitnessCountsToItsIndex) {
  for (std::size_t n = 1; n <= atlas::kMaxN; ++n) {
    const Poset w = atlas::witness(n);
    EXPECT_EQ(w.size(), atlas::lambda(n));
    EXPECT_EQ(count_brute(w), n);
    EXPECT_EQ(count_ideal_dp(w), n);
  }
}

TEST(CountIdealDp, ExceedsMachineWordsWithoutOverflow) {
  const Poset p = direct_sum(chain(40), chain(40));
  EXPECT_EQ(count_ideal_dp(p), binomial(80, 40));
  EXPECT_GT(count_ideal_dp(antichain(21)), ExtensionCount(~std::uint64_t{0}));
}

TEST(CountIdealDp, MultiWordPosets) {
  EXPECT_EQ(count_ideal_dp(direct_sum(chain(100), chain(1))), 101);
  EXPECT_EQ(count_ideal_dp(direct_sum(chain(600), chain(1))), 601);
  EXPECT_EQ(count_ideal_dp(ordinal_sum(chain(300), n_poset())), 5);
}

TEST(CountIdealDp, RefusesBeyondIdealCap) {
  CountLimits tight;
  tight.dp_max_ideals = 100;
  EXPECT_THROW(count_ideal_dp(antichain(10), tight), Infeasible);
  EXPECT_EQ(count_ideal_dp(chain(50), tight), 1);
}

TEST(CountExtensions, AutoPicksAMethod) {
  EXPECT_EQ(count_extensions(n_poset()), 5);
  EXPECT_EQ(count_extensions(direct_sum(chain(20), chain(1))), 21);
}

TEST(OracleTriangle, BruteEqualsDpOnEveryClassThroughSizeSix) {
  std::size_t checked = 0;
  for (const auto& level : classes()) {
    for (const auto& p : level) {
      ASSERT_EQ(count_brute(p), count_ideal_dp(p));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 406u);
}

TEST(CompositionLaws, DirectAndOrdinalSums) {
  for (std::size_t a = 0; a <= 4; ++a) {
    for (const auto& p : classes()[a]) {
      const auto ep = count_ideal_dp(p);
      for (std::size_t b = 0; b <= 4; ++b) {
        for (const auto& q : classes()[b]) {
          const auto eq = count_ideal_dp(q);
          ASSERT_EQ(count_ideal_dp(direct_sum(p, q)), binomial(a + b, a) * ep * eq);
          ASSERT_EQ(count_ideal_dp(ordinal_sum(p, q)), ep * eq);
        }
      }
    }
  }
}

TEST(CompositionLaws, ChainOnTopAndLiftedChain) {
  for (std::size_t a = 0; a <= 5; ++a) {
    for (const auto& p : classes()[a]) {
      const auto ep = count_ideal_dp(p);
      for (std::size_t len = 0; len <= 5; ++len) {
        ASSERT_EQ(count_ideal_dp(ordinal_sum(p, chain(len))), ep);
        ASSERT_EQ(count_ideal_dp(direct_sum(ordinal_sum(p, chain(len)), chain(1))),
                  ExtensionCount(a + len + 1) * ep);
      }
    }
  }
}

TEST(GadgetLaw, BruteAndDpMatchClosedFormThroughNine) {
  for (std::size_t m = 4; m <= 9; ++m) {
    for (std::size_t j = 2; j <= m - 2; ++j) {
      for (std::size_t i = 1; i < j; ++i) {
        const Poset g = gadget_q(i, j, m);
        const ExtensionCount expected = (m - i) * j - i;
        ASSERT_EQ(count_ideal_dp(g), expected) << i << ' ' << j << ' ' << m;
        if (m <= 8) ASSERT_EQ(count_brute(g), expected) << i << ' ' << j << ' ' << m;
      }
    }
  }
  EXPECT_EQ(count_brute(gadget_q(1, 2, 4)), 5);
  EXPECT_EQ(count_brute(gadget_q(1, 3, 5)), 11);
}

}  // namespace
}  // namespace linext
