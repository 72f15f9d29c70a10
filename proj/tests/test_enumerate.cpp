#include "linext/enumerate.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <set>

namespace linext {
namespace {

TEST(EnumeratePosets, EmptySize) {
  const auto all = enumerate_posets(0);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].empty());
}

TEST(EnumeratePosets, SizeThreeHasFiveClasses) {
  const auto all = enumerate_posets(3);
  EXPECT_EQ(all.size(), 5u);
  EXPECT_EQ(oracle::brute_class_count(3), 5u);
}

TEST(EnumeratePosets, SizeFiveHasSixtyThreeClasses) {
  EXPECT_EQ(enumerate_posets(5).size(), 63u);
  EXPECT_EQ(oracle::brute_class_count(5), 63u);
}

TEST(EnumeratePosets, RepresentativesArePairwiseNonIsomorphic) {
  for (std::size_t m = 0; m <= 5; ++m) {
    const auto all = enumerate_posets(m);
    for (std::size_t a = 0; a < all.size(); ++a) {
      ASSERT_TRUE(is_strict_partial_order(all[a]));
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        ASSERT_FALSE(oracle::isomorphic(all[a], all[b]));
      }
    }
  }
}

// Independent check: all labeled relations, deduplicated by the minimum
// encoding over every relabeling.
TEST(EnumeratePosets, CompleteAgainstLabeledBruteForceThroughSix) {
  for (std::size_t m = 0; m <= 6; ++m) {
    EXPECT_EQ(enumerate_classes(m).size(), oracle::brute_class_count(m)) << "size " << m;
  }
}

TEST(EnumeratePosets, NaturalLabelingCounts) {
  // Naturally labeled posets on m elements: 1, 1, 2, 7, 40, 357, 4824.
  const std::size_t expected[] = {1, 1, 2, 7, 40, 357, 4824};
  for (std::size_t m = 0; m <= 6; ++m) {
    std::size_t count = 0;
    for_each_naturally_labeled(m, [&](const auto&) { ++count; });
    EXPECT_EQ(count, expected[m]) << m;
  }
}

TEST(EnumeratePosets, JobsDoNotChangeTheResult) {
  EnumerationOptions one{9, 1};
  EnumerationOptions four{9, 4};
  EXPECT_EQ(enumerate_classes(6, one), enumerate_classes(6, four));
  EXPECT_EQ(enumerate_classes(2, four).size(), 2u);
}

TEST(EnumeratePosets, OutputIsSortedAndDeterministic) {
  const auto a = enumerate_classes(5);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(a, enumerate_classes(5));
}

TEST(EnumeratePosets, RefusesBeyondCap) {
  EXPECT_THROW(enumerate_classes(10), Infeasible);
  EXPECT_THROW(enumerate_posets(4, EnumerationOptions{3, 1}), Infeasible);
}

}  // namespace
}  // namespace linext
