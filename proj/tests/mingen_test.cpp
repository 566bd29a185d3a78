#include <gtest/gtest.h>

#include <random>

#include "fcil/mingen.hpp"
#include "fcil/oracle.hpp"
#include "test_support.hpp"

namespace fcil {
namespace {

using testing::basket6;
using testing::show;

std::vector<std::string> gens_of(const TransactionDatabase& db,
                                 const std::vector<GeneratorSet>& all, const Itemset& x) {
  for (const auto& g : all) {
    if (g.closed == x) {
      std::vector<std::string> out;
      for (const auto& s : g.generators) out.push_back(show(db, s));
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  throw std::out_of_range("no such closed itemset");
}

TEST(MinimalGenerators, Example) {
  const auto db = basket6();
  const auto index = vertical_index(db);
  const auto gens = minimal_generators(mine_closed(index, 3), index);
  using V = std::vector<std::string>;
  EXPECT_EQ(gens_of(db, gens, db.itemset({"C", "W"})), V{"W"});
  EXPECT_EQ(gens_of(db, gens, db.itemset({"A", "C", "T", "W"})), (V{"AT", "TW"}));
  EXPECT_EQ(gens_of(db, gens, db.itemset({"C"})), V{"C"});
  EXPECT_EQ(gens_of(db, gens, db.itemset({"C", "D", "W"})), V{"DW"});
  EXPECT_EQ(gens_of(db, gens, db.itemset({"A", "C", "W"})), V{"A"});
  EXPECT_EQ(gens_of(db, gens, db.itemset({"C", "D"})), V{"D"});
  EXPECT_EQ(gens_of(db, gens, db.itemset({"C", "T"})), V{"T"});
}

TEST(MinimalGenerators, ClosureOfEmptySetWithSeveralItems) {
  // C and D occur everywhere: closure of the empty set is CD.
  const auto db = parse_transactions("C D A\nC D\nC D A B\n");
  const auto index = vertical_index(db);
  const auto gens = minimal_generators(mine_closed(index, 1), index);
  using V = std::vector<std::string>;
  EXPECT_EQ(gens_of(db, gens, db.itemset({"C", "D"})), (V{"C", "D"}));
  EXPECT_EQ(gens_of(db, gens, db.itemset({"A", "C", "D"})), V{"A"});
  EXPECT_EQ(gens_of(db, gens, db.itemset({"A", "B", "C", "D"})), V{"B"});
}

TEST(MinimalGenerators, OracleEquivalence) {
  std::mt19937 rng(314159);
  for (int round = 0; round < 150; ++round) {
    const auto db = testing::random_db(rng);
    for (Count minsup = 1; minsup <= db.tid_count(); ++minsup) {
      const auto index = vertical_index(db);
      const auto patterns = mine_closed(index, minsup);
      const auto gens = minimal_generators(patterns, index);
      ASSERT_EQ(gens.size(), patterns.size());
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto& g = gens[k];
        ASSERT_EQ(g.closed, patterns[k].itemset);
        ASSERT_FALSE(g.generators.empty());
        ASSERT_EQ(g.generators, oracle::brute_force_mingens(db, g.closed))
            << "round " << round << " minsup " << minsup;
        for (const auto& z : g.generators) {
          // Closure consistency.
          ASSERT_EQ(oracle::closure(db, z).itemset, g.closed);
          for (const auto& other : g.generators) {
            if (other != z) {
              ASSERT_FALSE(z.is_subset_of(other));
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace fcil
