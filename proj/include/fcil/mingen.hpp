#pragma once

#include <algorithm>
#include <vector>

#include "fcil/closed_miner.hpp"
#include "fcil/corpus.hpp"

namespace fcil {

// mGs(X): the inclusion-minimal non-empty subsets of a closed itemset X that
// have the same support as X. Never empty; stored in lexicographic order.
struct GeneratorSet {
  Itemset closed;
  Count support = 0;
  std::vector<Itemset> generators;
};

namespace detail {

struct FreeCandidate {
  Itemset items;
  Tidset tids;
};

inline const FreeCandidate* find_in_level(const std::vector<FreeCandidate>& level,
                                          const Itemset& items) {
  auto it = std::lower_bound(level.begin(), level.end(), items,
                             [](const FreeCandidate& c, const Itemset& v) { return c.items < v; });
  return it != level.end() && it->items == items ? &*it : nullptr;
}

inline Itemset drop_at(const Itemset& s, std::size_t pos) {
  std::vector<ItemId> out;
  out.reserve(s.size() - 1);
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (p != pos) out.push_back(s[p]);
  }
  return Itemset::from_sorted(std::move(out));
}

}  // namespace detail

// Levelwise walk over subsets of X. Only free subsets (support strictly below
// every immediate non-empty subset) that are not yet generators are extended;
// a minimal generator's non-empty subsets are all free.
inline GeneratorSet minimal_generators_of(const ClosedPattern& pattern,
                                          const VerticalIndex& index) {
  GeneratorSet out{pattern.itemset, pattern.support, {}};
  const Count target = pattern.support;

  std::vector<detail::FreeCandidate> level;
  for (ItemId i : pattern.itemset) {
    const Tidset& t = index.tidset(i);
    if (t.cardinality() == target) {
      out.generators.push_back(Itemset{i});
    } else {
      level.push_back({Itemset{i}, t});
    }
  }

  while (level.size() > 1) {
    std::vector<detail::FreeCandidate> next;
    for (std::size_t a = 0; a < level.size(); ++a) {
      const Itemset& left = level[a].items;
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        const Itemset& right = level[b].items;
        // Apriori join: shared prefix of length k-1.
        if (!std::equal(left.begin(), left.end() - 1, right.begin())) break;
        Itemset joined = left.with(right.back());
        Tidset tids = level[a].tids.intersect(index.tidset(right.back()));
        const Count s = tids.cardinality();
        // Free: support strictly below every immediate subset, each of which
        // must itself be a kept (free, non-generator) candidate.
        bool free = s < level[a].tids.cardinality() && s < level[b].tids.cardinality();
        for (std::size_t drop = 0; free && drop + 2 < joined.size(); ++drop) {
          const auto* sub = detail::find_in_level(level, detail::drop_at(joined, drop));
          free = sub != nullptr && s < sub->tids.cardinality();
        }
        if (!free) continue;
        if (s == target) {
          out.generators.push_back(std::move(joined));
        } else {
          next.push_back({std::move(joined), std::move(tids)});
        }
      }
    }
    level = std::move(next);
  }

  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

// One GeneratorSet per pattern, index-aligned with `patterns`.
inline std::vector<GeneratorSet> minimal_generators(const std::vector<ClosedPattern>& patterns,
                                                    const VerticalIndex& index) {
  std::vector<GeneratorSet> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(minimal_generators_of(p, index));
  return out;
}

}  // namespace fcil
