#include <gtest/gtest.h>

#include <random>

#include "fcil/closed_miner.hpp"
#include "fcil/oracle.hpp"
#include "test_support.hpp"

namespace fcil {
namespace {

using testing::basket6;
using testing::show;

TEST(ResolveMinsup, FractionsAndCounts) {
  EXPECT_EQ(resolve_minsup(MinsupSpec::fraction({1, 2}), 6), 3u);
  EXPECT_EQ(resolve_minsup(MinsupSpec::fraction({1, 1}), 6), 6u);
  EXPECT_EQ(resolve_minsup(MinsupSpec::absolute(3), 6), 3u);
  // ceil(0.2 * 8124) = ceil(1624.8)
  EXPECT_EQ(resolve_minsup(MinsupSpec::parse("0.2"), 8124), 1625u);
  EXPECT_EQ(resolve_minsup(MinsupSpec::parse("50%"), 6), 3u);
  EXPECT_EQ(resolve_minsup(MinsupSpec::parse("3t"), 6), 3u);
  EXPECT_EQ(resolve_minsup(MinsupSpec::parse("0.5"), 0), 1u);
}

TEST(ResolveMinsup, RejectsOutOfRange) {
  EXPECT_THROW(MinsupSpec::fraction({0, 1}), ConfigError);
  EXPECT_THROW(MinsupSpec::fraction({3, 2}), ConfigError);
  EXPECT_THROW(MinsupSpec::absolute(0), ConfigError);
  EXPECT_THROW(MinsupSpec::parse("0t"), ConfigError);
  EXPECT_THROW(MinsupSpec::parse("1.5"), ConfigError);
  EXPECT_THROW(MinsupSpec::parse("-1"), ConfigError);
}

std::vector<std::pair<std::string, Count>> named(const TransactionDatabase& db,
                                                 const std::vector<ClosedPattern>& ps) {
  std::vector<std::pair<std::string, Count>> out;
  for (const auto& p : ps) out.emplace_back(show(db, p.itemset), p.support);
  return out;
}

TEST(MineClosed, ExampleAtHalfSupport) {
  const auto db = basket6();
  const auto closed = mine_closed(db, 3);
  const std::vector<std::pair<std::string, Count>> expect{
      {"C", 6}, {"CW", 5}, {"CD", 4}, {"CT", 4}, {"ACW", 4}, {"CDW", 3}, {"ACTW", 3}};
  auto got = named(db, closed);
  auto sorted_expect = expect;
  std::sort(got.begin(), got.end());
  std::sort(sorted_expect.begin(), sorted_expect.end());
  EXPECT_EQ(got, sorted_expect);
  for (const auto& p : closed) {
    EXPECT_EQ(p.tidset.cardinality(), p.support);
    EXPECT_EQ(support(vertical_index(db), p.itemset), p.support);
  }
  // Canonical order: support descending, then itemset.
  for (std::size_t k = 1; k < closed.size(); ++k) {
    EXPECT_TRUE(canonical_before(closed[k - 1].itemset, closed[k - 1].support,
                                 closed[k].itemset, closed[k].support));
  }
}

TEST(MineClosed, ThresholdAboveEverySupport) {
  EXPECT_TRUE(mine_closed(basket6(), 7).empty());
}

TEST(MineClosed, SingleTransaction) {
  const auto db = parse_transactions("A B\n");
  const auto closed = mine_closed(db, 1);
  ASSERT_EQ(closed.size(), 1u);
  EXPECT_EQ(closed[0].itemset, db.itemset({"A", "B"}));
  EXPECT_EQ(closed[0].support, 1u);
}

TEST(MineClosed, ZeroMinsupRejected) {
  EXPECT_THROW(mine_closed(basket6(), 0), ConfigError);
}

TEST(MineClosed, FullSupportItemsOnly) {
  const auto closed = mine_closed(basket6(), 6);
  ASSERT_EQ(closed.size(), 1u);
  EXPECT_EQ(show(basket6(), closed[0].itemset), "C");
}

TEST(CountFrequent, Example) {
  EXPECT_EQ(count_frequent(basket6(), 3), 19u);
  EXPECT_EQ(count_frequent(basket6(), 7), 0u);
  EXPECT_EQ(count_frequent(basket6(), 6), 1u);
}

TEST(MineClosed, OracleEquivalenceBothLayouts) {
  std::mt19937 rng(20240601);
  for (int round = 0; round < 150; ++round) {
    const auto db = testing::random_db(rng);
    for (Count minsup = 1; minsup <= db.tid_count(); ++minsup) {
      const auto expect = oracle::brute_force_closed(db, minsup);
      for (auto layout : {TidsetLayout::bitmap, TidsetLayout::sorted}) {
        const VerticalIndex index(db, layout);
        const auto got = mine_closed(index, minsup);
        ASSERT_EQ(got.size(), expect.size()) << "round " << round << " minsup " << minsup;
        for (std::size_t k = 0; k < got.size(); ++k) {
          ASSERT_EQ(got[k].itemset, expect[k].itemset);
          ASSERT_EQ(got[k].support, expect[k].support);
          ASSERT_EQ(got[k].tidset, expect[k].tidset);
          ASSERT_GE(got[k].support, minsup);
        }
        ASSERT_EQ(count_frequent(index, minsup), oracle::brute_force_frequent_count(db, minsup));
      }
    }
  }
}

// Every frequent itemset has its closure among the mined patterns.
TEST(MineClosed, EveryFrequentItemsetIsCovered) {
  std::mt19937 rng(99);
  for (int round = 0; round < 60; ++round) {
    const auto db = testing::random_db(rng, {8, 20});
    const auto index = vertical_index(db);
    const Count minsup = 1 + static_cast<Count>(rng() % db.tid_count());
    const auto closed = mine_closed(index, minsup);
    for (std::uint32_t m = 1; m < (1u << db.item_count()); ++m) {
      const auto x = oracle::from_mask(m);
      const Count s = support(index, x);
      if (s < minsup) continue;
      const bool covered = std::any_of(closed.begin(), closed.end(), [&](const auto& p) {
        return x.is_subset_of(p.itemset) && p.support == s;
      });
      ASSERT_TRUE(covered);
    }
  }
}

}  // namespace
}  // namespace fcil
