#pragma once

// Brute-force reference implementations. Everything here enumerates subsets
// of a small item universe directly over the transactions and shares no code
// path with the miners it is used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fcil/closed_miner.hpp"
#include "fcil/corpus.hpp"
#include "fcil/error.hpp"
#include "fcil/ratio.hpp"
#include "fcil/rulegen.hpp"

namespace fcil::oracle {

inline constexpr std::size_t kMaxItems = 12;
inline constexpr std::size_t kMaxTarItemsets = 4096;

using Mask = std::uint32_t;

inline Mask to_mask(const Itemset& s) {
  Mask m = 0;
  for (ItemId i : s) m |= Mask{1} << i;
  return m;
}

inline Itemset from_mask(Mask m) {
  std::vector<ItemId> out;
  for (ItemId i = 0; m; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i);
  }
  return Itemset::from_sorted(std::move(out));
}

// Support of every itemset over a database of at most kMaxItems items.
class SupportTable {
 public:
  explicit SupportTable(const TransactionDatabase& db) : items_(db.item_count()) {
    if (items_ > kMaxItems) {
      throw OracleLimitError("oracle refuses databases with more than " +
                             std::to_string(kMaxItems) + " items");
    }
    rows_.reserve(db.tid_count());
    for (const auto& t : db.transactions()) rows_.push_back(to_mask(t));
    support_.assign(std::size_t{1} << items_, 0);
    for (Mask x = 0; x < support_.size(); ++x) {
      Count n = 0;
      for (Mask row : rows_) n += (x & ~row) == 0;
      support_[x] = n;
    }
  }

  std::size_t item_count() const { return items_; }
  Mask universe() const { return static_cast<Mask>((std::size_t{1} << items_) - 1); }
  Mask limit() const { return static_cast<Mask>(support_.size()); }
  Count support(Mask x) const { return support_[x]; }
  const std::vector<Mask>& rows() const { return rows_; }

  Mask closure(Mask x) const {
    Mask acc = universe();
    for (Mask row : rows_) {
      if ((x & ~row) == 0) acc &= row;
    }
    return acc;
  }

 private:
  std::size_t items_;
  std::vector<Mask> rows_;
  std::vector<Count> support_;
};

struct ClosureResult {
  Itemset itemset;
  Count support = 0;
  // Support 0: by convention the closure is then the whole item universe.
  bool vacuous = false;
};

// Intersection of all transactions containing x (no item cap).
inline ClosureResult closure(const TransactionDatabase& db, const Itemset& x) {
  std::vector<ItemId> all(db.item_count());
  std::iota(all.begin(), all.end(), ItemId{0});
  Itemset acc = Itemset::from_sorted(std::move(all));
  Count n = 0;
  for (const auto& t : db.transactions()) {
    if (x.is_subset_of(t)) {
      ++n;
      std::vector<ItemId> keep;
      std::set_intersection(acc.begin(), acc.end(), t.begin(), t.end(),
                            std::back_inserter(keep));
      acc = Itemset::from_sorted(std::move(keep));
    }
  }
  return {std::move(acc), n, n == 0};
}

inline Tidset scan_tidset(const SupportTable& table, Mask x) {
  Tidset out(table.rows().size(), default_layout(table.rows().size()));
  for (std::size_t t = 0; t < table.rows().size(); ++t) {
    if ((x & ~table.rows()[t]) == 0) out.push_back(static_cast<Tid>(t));
  }
  return out;
}

// Non-empty itemsets X with support(X) >= minsup and closure(X) = X.
inline std::vector<ClosedPattern> brute_force_closed(const TransactionDatabase& db,
                                                     Count minsup) {
  const SupportTable table(db);
  std::vector<ClosedPattern> out;
  for (Mask x = 1; x < table.limit(); ++x) {
    if (table.support(x) >= minsup && table.closure(x) == x) {
      out.push_back({from_mask(x), table.support(x), scan_tidset(table, x)});
    }
  }
  sort_canonical(out);
  return out;
}

inline std::uint64_t brute_force_frequent_count(const TransactionDatabase& db, Count minsup) {
  const SupportTable table(db);
  std::uint64_t n = 0;
  for (Mask x = 1; x < table.limit(); ++x) n += table.support(x) >= minsup;
  return n;
}

namespace detail {

inline std::vector<Mask> mingens(const SupportTable& table, Mask x) {
  std::vector<Mask> gens;
  const Count target = table.support(x);
  // Every non-empty sub-mask of x, in increasing popcount so that minimality
  // only needs a check against generators already found.
  std::vector<Mask> subs;
  for (Mask s = x; s; s = (s - 1) & x) subs.push_back(s);
  std::sort(subs.begin(), subs.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (Mask s : subs) {
    if (table.support(s) != target) continue;
    const bool minimal = std::none_of(gens.begin(), gens.end(),
                                      [&](Mask g) { return (g & ~s) == 0; });
    if (minimal) gens.push_back(s);
  }
  return gens;
}

inline std::vector<Itemset> sorted_itemsets(const std::vector<Mask>& masks) {
  std::vector<Itemset> out;
  for (Mask m : masks) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// mGs(x) for a closed x; throws std::invalid_argument if x is not closed.
inline std::vector<Itemset> brute_force_mingens(const TransactionDatabase& db, const Itemset& x) {
  const SupportTable table(db);
  const Mask m = to_mask(x);
  if (x.empty() || table.support(m) == 0 || table.closure(m) != m) {
    throw std::invalid_argument("brute_force_mingens needs a non-empty closed itemset");
  }
  return detail::sorted_itemsets(detail::mingens(table, m));
}

// Rules Z -> Y \ Z for closed frequent X, Z in mGs(X), closed Y with X <= Y,
// confidence support(Y)/support(X) >= minconf (always met when Y = X).
inline std::vector<Rule> brute_force_mnar(const TransactionDatabase& db, Count minsup,
                                          Ratio minconf) {
  make_minconf(minconf);
  const SupportTable table(db);
  std::vector<Mask> closed;
  for (Mask x = 1; x < table.limit(); ++x) {
    if (table.support(x) >= minsup && table.closure(x) == x) closed.push_back(x);
  }
  std::vector<Rule> out;
  for (Mask x : closed) {
    const auto gens = detail::mingens(table, x);
    for (Mask y : closed) {
      if ((x & ~y) != 0) continue;
      const Ratio conf{table.support(y), table.support(x)};
      if (y != x && conf < minconf) continue;
      for (Mask z : gens) {
        const Mask rhs = y & ~z;
        if (rhs) out.push_back({from_mask(z), from_mask(rhs), table.support(y), conf});
      }
    }
  }
  sort_rules(out);
  return out;
}

// All X -> Y with X, Y non-empty and disjoint, X u Y frequent, and
// support(X u Y)/support(X) >= minconf.
inline std::vector<Rule> brute_force_tar(const TransactionDatabase& db, Count minsup,
                                         Ratio minconf) {
  make_minconf(minconf);
  const SupportTable table(db);
  std::size_t frequent = 0;
  for (Mask x = 1; x < table.limit(); ++x) frequent += table.support(x) >= minsup;
  if (frequent > kMaxTarItemsets) {
    throw OracleLimitError("too many frequent itemsets for rule enumeration");
  }
  std::vector<Rule> out;
  for (Mask u = 1; u < table.limit(); ++u) {
    const Count su = table.support(u);
    if (su < minsup) continue;
    for (Mask lhs = (u - 1) & u; lhs; lhs = (lhs - 1) & u) {
      const Ratio conf{su, table.support(lhs)};
      if (conf >= minconf) out.push_back({from_mask(lhs), from_mask(u & ~lhs), su, conf});
    }
  }
  sort_rules(out);
  return out;
}

// r1 is at least as general as r2: ante(r1) <= ante(r2), cons(r2) <= cons(r1).
inline bool is_more_general(const Rule& r1, const Rule& r2) {
  return r1.antecedent.is_subset_of(r2.antecedent) &&
         r2.consequent.is_subset_of(r1.consequent);
}

// Cover edges (parent, child) of the inclusion order on {empty} u patterns,
// found by testing every pair against every possible intermediate.
inline std::vector<std::pair<Itemset, Itemset>> brute_force_covers(
    const std::vector<ClosedPattern>& patterns) {
  std::vector<Itemset> family{Itemset{}};
  for (const auto& p : patterns) family.push_back(p.itemset);
  std::vector<std::pair<Itemset, Itemset>> out;
  for (const auto& lo : family) {
    for (const auto& hi : family) {
      if (!lo.is_proper_subset_of(hi)) continue;
      const bool between = std::any_of(family.begin(), family.end(), [&](const Itemset& z) {
        return lo.is_proper_subset_of(z) && z.is_proper_subset_of(hi);
      });
      if (!between) out.emplace_back(lo, hi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fcil::oracle
