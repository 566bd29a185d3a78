#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "fcil/corpus.hpp"
#include "fcil/error.hpp"
#include "fcil/ratio.hpp"

namespace fcil {

// Minimum support as given by the user: an absolute transaction count or a
// fraction of tid_count.
class MinsupSpec {
 public:
  static MinsupSpec absolute(std::uint64_t count) {
    if (count < 1) throw ConfigError("absolute minsup must be >= 1");
    return MinsupSpec(count);
  }

  static MinsupSpec fraction(Ratio f) {
    if (f.den == 0 || f.num == 0 || f.num > f.den) {
      throw ConfigError("fractional minsup must lie in (0, 1]");
    }
    return MinsupSpec(f);
  }

  // "3t" is an absolute count; "0.5", "1/2" and "50%" are fractions.
  static MinsupSpec parse(std::string_view text) {
    if (!text.empty() && (text.back() == 't' || text.back() == 'T')) {
      text.remove_suffix(1);
      return absolute(detail::parse_digits(text, "minsup"));
    }
    return fraction(parse_ratio(text));
  }

  bool is_absolute() const { return std::holds_alternative<std::uint64_t>(value_); }

  // ceil(f * tid_count), never below 1.
  Count resolve(std::size_t tid_count) const {
    if (const auto* n = std::get_if<std::uint64_t>(&value_)) {
      return static_cast<Count>(std::min<std::uint64_t>(*n, UINT32_MAX));
    }
    const Ratio f = std::get<Ratio>(value_);
    const auto prod = static_cast<unsigned __int128>(f.num) * tid_count;
    const auto ceil = static_cast<std::uint64_t>((prod + f.den - 1) / f.den);
    return static_cast<Count>(std::max<std::uint64_t>(ceil, 1));
  }

 private:
  explicit MinsupSpec(std::uint64_t n) : value_(n) {}
  explicit MinsupSpec(Ratio f) : value_(f) {}

  std::variant<std::uint64_t, Ratio> value_;
};

inline Count resolve_minsup(const MinsupSpec& spec, std::size_t tid_count) {
  return spec.resolve(tid_count);
}

struct ClosedPattern {
  Itemset itemset;
  Count support = 0;
  Tidset tidset;
};

// Support descending, then itemset lexicographic.
inline bool canonical_before(const Itemset& a, Count sa, const Itemset& b, Count sb) {
  if (sa != sb) return sa > sb;
  return a < b;
}

inline void sort_canonical(std::vector<ClosedPattern>& patterns) {
  std::sort(patterns.begin(), patterns.end(), [](const auto& a, const auto& b) {
    return canonical_before(a.itemset, a.support, b.itemset, b.support);
  });
}

namespace detail {

// Vertical depth-first closed-itemset search with the four tidset-comparison
// properties and a hash-based subsumption check against emitted patterns.
class CharmSearch {
 public:
  CharmSearch(Count minsup) : minsup_(minsup) {}

  struct Candidate {
    Itemset items;
    Tidset tids;
  };

  std::vector<ClosedPattern> run(std::vector<Candidate> roots) {
    sort_by_support(roots);
    extend(roots);
    return std::move(closed_);
  }

 private:
  static void sort_by_support(std::vector<Candidate>& c) {
    std::stable_sort(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) {
      if (a.tids.cardinality() != b.tids.cardinality()) {
        return a.tids.cardinality() < b.tids.cardinality();
      }
      return a.items < b.items;
    });
  }

  void extend(std::vector<Candidate>& klass) {
    std::vector<bool> removed(klass.size(), false);
    for (std::size_t i = 0; i < klass.size(); ++i) {
      if (removed[i]) continue;
      Itemset prefix = klass[i].items;
      const Tidset& ti = klass[i].tids;
      std::vector<Candidate> next;
      for (std::size_t j = i + 1; j < klass.size(); ++j) {
        if (removed[j]) continue;
        const Tidset& tj = klass[j].tids;
        Tidset y = ti.intersect(tj);
        if (y.cardinality() < minsup_) continue;
        const bool i_in_j = y.cardinality() == ti.cardinality();
        const bool j_in_i = y.cardinality() == tj.cardinality();
        if (i_in_j && j_in_i) {
          removed[j] = true;
          prefix = prefix.union_with(klass[j].items);
        } else if (i_in_j) {
          prefix = prefix.union_with(klass[j].items);
        } else if (j_in_i) {
          removed[j] = true;
          next.push_back({klass[j].items, std::move(y)});
        } else {
          next.push_back({klass[j].items, std::move(y)});
        }
      }
      if (!next.empty()) {
        // Items added to the prefix after a candidate was queued cover its
        // tidset, so folding the final prefix in keeps every tidset exact.
        for (auto& c : next) c.items = prefix.union_with(c.items);
        sort_by_support(next);
        extend(next);
      }
      emit_if_closed(std::move(prefix), ti);
    }
  }

  void emit_if_closed(Itemset items, const Tidset& tids) {
    const std::size_t key = tids.hash();
    auto& bucket = seen_[key];
    for (std::size_t idx : bucket) {
      const auto& c = closed_[idx];
      if (c.support == tids.cardinality() && c.tidset == tids) return;
    }
    bucket.push_back(closed_.size());
    closed_.push_back({std::move(items), tids.cardinality(), tids});
  }

  Count minsup_;
  std::vector<ClosedPattern> closed_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen_;
};

}  // namespace detail

// All frequent closed itemsets at absolute threshold `minsup`, in canonical
// order. The closure of the empty set is reported when it is non-empty and
// frequent; the empty itemset itself never is.
inline std::vector<ClosedPattern> mine_closed(const VerticalIndex& index, Count minsup) {
  if (minsup < 1) throw ConfigError("minsup must be >= 1");
  std::vector<detail::CharmSearch::Candidate> roots;
  for (ItemId i = 0; i < index.item_count(); ++i) {
    if (index.tidset(i).cardinality() >= minsup) {
      roots.push_back({Itemset{i}, index.tidset(i)});
    }
  }
  auto out = detail::CharmSearch(minsup).run(std::move(roots));
  sort_canonical(out);
  return out;
}

inline std::vector<ClosedPattern> mine_closed(const TransactionDatabase& db, Count minsup) {
  return mine_closed(VerticalIndex(db), minsup);
}

namespace detail {

inline std::uint64_t count_extensions(const std::vector<Tidset>& klass, Count minsup) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < klass.size(); ++i) {
    ++n;
    std::vector<Tidset> next;
    for (std::size_t j = i + 1; j < klass.size(); ++j) {
      Tidset y = klass[i].intersect(klass[j]);
      if (y.cardinality() >= minsup) next.push_back(std::move(y));
    }
    if (!next.empty()) n += count_extensions(next, minsup);
  }
  return n;
}

}  // namespace detail

// Number of non-empty itemsets with support >= minsup (Eclat-style count).
inline std::uint64_t count_frequent(const VerticalIndex& index, Count minsup) {
  if (minsup < 1) throw ConfigError("minsup must be >= 1");
  std::vector<ItemId> items;
  for (ItemId i = 0; i < index.item_count(); ++i) {
    if (index.tidset(i).cardinality() >= minsup) items.push_back(i);
  }
  std::sort(items.begin(), items.end(), [&](ItemId a, ItemId b) {
    return index.tidset(a).cardinality() < index.tidset(b).cardinality();
  });
  std::vector<Tidset> roots;
  roots.reserve(items.size());
  for (ItemId i : items) roots.push_back(index.tidset(i));
  return detail::count_extensions(roots, minsup);
}

inline std::uint64_t count_frequent(const TransactionDatabase& db, Count minsup) {
  return count_frequent(VerticalIndex(db), minsup);
}

}  // namespace fcil
