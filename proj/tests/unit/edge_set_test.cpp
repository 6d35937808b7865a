#include <random>

#include <gtest/gtest.h>

#include "coarsepaths/edge_set.hpp"

namespace cp = coarsepaths;

namespace {

cp::EdgeSet from_mask(std::size_t universe, unsigned mask) {
  cp::EdgeSet s(universe);
  for (cp::EdgeId e = 0; e < universe; ++e) {
    if ((mask >> e) & 1U) s.set(e);
  }
  return s;
}

}  // namespace

TEST(EdgeSet, BasicOperations) {
  auto s = cp::EdgeSet::from_ids(70, {0, 3, 64, 69});
  EXPECT_EQ(s.count(), 4u);
  EXPECT_TRUE(s.test(64));
  EXPECT_FALSE(s.test(65));
  s.flip(65);
  s.reset(0);
  EXPECT_EQ(s.ids(), (std::vector<cp::EdgeId>{3, 64, 65, 69}));
  EXPECT_TRUE(cp::EdgeSet(70).none());
  EXPECT_TRUE(s.any());
}

TEST(EdgeSet, SubsetAndIntersection) {
  const auto a = cp::EdgeSet::from_ids(10, {1, 2});
  const auto b = cp::EdgeSet::from_ids(10, {1, 2, 7});
  const auto c = cp::EdgeSet::from_ids(10, {5});
  EXPECT_TRUE(a.is_subset_of(b));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(a.intersects(c));
  EXPECT_EQ((b & c).count(), 0u);
  EXPECT_EQ((a | c).ids(), (std::vector<cp::EdgeId>{1, 2, 5}));
  auto d = b;
  d.subtract(a);
  EXPECT_EQ(d.ids(), (std::vector<cp::EdgeId>{7}));
}

TEST(EdgeSet, CardinalityIdentityExhaustive) {
  // |A xor B| = |A| + |B| - 2|A and B| over every pair of 9-bit sets
  constexpr std::size_t kBits = 9;
  for (unsigned x = 0; x < (1U << kBits); ++x) {
    const auto a = from_mask(kBits, x);
    for (unsigned y = 0; y < (1U << kBits); ++y) {
      const auto b = from_mask(kBits, y);
      ASSERT_EQ(cp::symmetric_difference_size(a, b), a.count() + b.count() - 2 * cp::intersection_size(a, b));
      ASSERT_EQ((a ^ b).count(), static_cast<std::size_t>(__builtin_popcount(x ^ y)));
    }
  }
}

TEST(EdgeSet, CardinalityIdentityMultiWord) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    cp::EdgeSet a(200), b(200);
    for (cp::EdgeId e = 0; e < 200; ++e) {
      if (rng() & 1) a.set(e);
      if (rng() & 1) b.set(e);
    }
    ASSERT_EQ(cp::symmetric_difference_size(a, b),
              a.count() + b.count() - 2 * cp::intersection_size(a, b));
  }
}

TEST(EdgeSet, OrderingAndHashAreConsistent) {
  const auto a = cp::EdgeSet::from_ids(100, {3, 90});
  const auto b = cp::EdgeSet::from_ids(100, {3, 90});
  const auto c = cp::EdgeSet::from_ids(100, {4});
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::hash<cp::EdgeSet>{}(a), std::hash<cp::EdgeSet>{}(b));
  EXPECT_NE(a, c);
  EXPECT_TRUE((a < c) != (c < a));
}
