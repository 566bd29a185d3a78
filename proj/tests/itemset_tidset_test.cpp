#include <gtest/gtest.h>

#include <random>

#include "fcil/itemset.hpp"
#include "fcil/ratio.hpp"
#include "fcil/tidset.hpp"

namespace fcil {
namespace {

TEST(Itemset, CanonicalOrderAndDedup) {
  Itemset a{3, 1, 2, 1};
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a, (Itemset{1, 2, 3}));
  EXPECT_TRUE(Itemset({1, 3}).is_proper_subset_of(a));
  EXPECT_FALSE(a.is_proper_subset_of(a));
  EXPECT_TRUE(a.is_subset_of(a));
  EXPECT_EQ(a.minus(Itemset{2}), (Itemset{1, 3}));
  EXPECT_EQ((Itemset{1}.union_with(Itemset{0, 4})), (Itemset{0, 1, 4}));
  EXPECT_EQ((Itemset{1, 5}.with(3)), (Itemset{1, 3, 5}));
  EXPECT_EQ((Itemset{1, 5}.with(5)), (Itemset{1, 5}));
  EXPECT_TRUE(Itemset({1, 5}).disjoint_with(Itemset{2, 4}));
  EXPECT_FALSE(Itemset({1, 5}).disjoint_with(Itemset{5}));
  EXPECT_LT(Itemset({0, 9}), Itemset({1}));
}

class TidsetLayouts : public ::testing::TestWithParam<TidsetLayout> {};

TEST_P(TidsetLayouts, BasicOps) {
  const auto layout = GetParam();
  const std::vector<Tid> xs{0, 3, 64, 65, 129};
  const std::vector<Tid> ys{3, 65, 128, 129};
  auto a = Tidset::of(130, layout, xs);
  auto b = Tidset::of(130, layout, ys);
  EXPECT_EQ(a.cardinality(), 5u);
  EXPECT_TRUE(a.contains(64));
  EXPECT_FALSE(a.contains(1));
  EXPECT_FALSE(a.contains(500));
  auto c = a.intersect(b);
  EXPECT_EQ(c.to_vector(), (std::vector<Tid>{3, 65, 129}));
  EXPECT_EQ(a.intersect_count(b), 3u);
  EXPECT_TRUE(c.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(c));
  EXPECT_EQ(Tidset::full(7, layout).cardinality(), 7u);
  EXPECT_THROW(a.push_back(130), std::out_of_range);
}

TEST_P(TidsetLayouts, RandomIntersectionsMatchStdSets) {
  const auto layout = GetParam();
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t universe = 1 + rng() % 300;
    std::vector<Tid> xs, ys;
    for (Tid t = 0; t < universe; ++t) {
      if (rng() % 3 == 0) xs.push_back(t);
      if (rng() % 2 == 0) ys.push_back(t);
    }
    std::vector<Tid> expect;
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(expect));
    auto a = Tidset::of(universe, layout, xs);
    auto b = Tidset::of(universe, layout, ys);
    auto c = a.intersect(b);
    ASSERT_EQ(c.to_vector(), expect);
    ASSERT_EQ(c.cardinality(), expect.size());
    ASSERT_LE(c.cardinality(), std::min(a.cardinality(), b.cardinality()));
    ASSERT_EQ(a.intersect_count(b), expect.size());
  }
}

INSTANTIATE_TEST_SUITE_P(Both, TidsetLayouts,
                         ::testing::Values(TidsetLayout::bitmap, TidsetLayout::sorted));

TEST(Tidset, LayoutsCompareByContent) {
  const std::vector<Tid> xs{1, 2, 40};
  EXPECT_EQ(Tidset::of(50, TidsetLayout::bitmap, xs), Tidset::of(50, TidsetLayout::sorted, xs));
  EXPECT_THROW(Tidset::of(50, TidsetLayout::bitmap, xs)
                   .intersect(Tidset::of(50, TidsetLayout::sorted, xs)),
               std::invalid_argument);
  EXPECT_EQ(default_layout(kBitmapTidLimit), TidsetLayout::bitmap);
  EXPECT_EQ(default_layout(kBitmapTidLimit + 1), TidsetLayout::sorted);
}

TEST(Ratio, ParsesDecimalsFractionsPercents) {
  EXPECT_TRUE(parse_ratio("0.8").identical({8, 10}));
  EXPECT_TRUE(parse_ratio("4/5").identical({4, 5}));
  EXPECT_TRUE(parse_ratio(".5").identical({5, 10}));
  EXPECT_TRUE(parse_ratio("80%").identical({80, 100}));
  EXPECT_TRUE(parse_ratio("1").identical({1, 1}));
  EXPECT_EQ(parse_ratio("0.8"), Ratio(4, 5));
  EXPECT_LT(Ratio(3, 5), Ratio(4, 5));
  EXPECT_GE(Ratio(4, 5), parse_ratio("80%"));
  EXPECT_THROW(parse_ratio("abc"), ConfigError);
  EXPECT_THROW(parse_ratio("1/0"), ConfigError);
  EXPECT_THROW(parse_ratio(""), ConfigError);
  EXPECT_THROW(parse_ratio("."), ConfigError);
}

TEST(Ratio, MinconfRange) {
  EXPECT_NO_THROW(parse_minconf("1.0"));
  EXPECT_THROW(parse_minconf("0"), ConfigError);
  EXPECT_THROW(parse_minconf("1.01"), ConfigError);
  EXPECT_THROW(parse_minconf("5/4"), ConfigError);
}

}  // namespace
}  // namespace fcil
