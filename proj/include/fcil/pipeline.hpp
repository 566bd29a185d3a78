#pragma once

#include <chrono>
#include <vector>

#include "fcil/closed_miner.hpp"
#include "fcil/corpus.hpp"
#include "fcil/lattice.hpp"
#include "fcil/mingen.hpp"
#include "fcil/rulegen.hpp"

namespace fcil {

struct StageTimings {
  double mine_ms = 0;     // closed itemsets and their minimal generators
  double lattice_ms = 0;  // cover-relation linking
  double rules_ms = 0;    // lattice traversal
};

struct MiningResult {
  Count minsup = 0;
  Ratio minconf;
  Lattice lattice;
  std::vector<Rule> rules;
  std::size_t generator_count = 0;
  StageTimings timings;
};

// corpus -> closed itemsets -> minimal generators -> lattice -> rules.
inline MiningResult run_pipeline(const TransactionDatabase& db, const VerticalIndex& index,
                                 Count minsup, Ratio minconf) {
  using clock = std::chrono::steady_clock;
  const auto ms = [](clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };
  MiningResult out;
  out.minsup = minsup;
  out.minconf = make_minconf(minconf);

  auto t0 = clock::now();
  auto patterns = mine_closed(index, minsup);
  auto generators = minimal_generators(patterns, index);
  for (const auto& g : generators) out.generator_count += g.generators.size();
  auto t1 = clock::now();
  out.lattice = build_lattice(std::move(patterns), std::move(generators), db.tid_count());
  auto t2 = clock::now();
  out.rules = mine_mnar(out.lattice, minconf);
  auto t3 = clock::now();
  out.timings = {ms(t1 - t0), ms(t2 - t1), ms(t3 - t2)};
  return out;
}

inline MiningResult run_pipeline(const TransactionDatabase& db, Count minsup, Ratio minconf) {
  return run_pipeline(db, VerticalIndex(db), minsup, minconf);
}

}  // namespace fcil
