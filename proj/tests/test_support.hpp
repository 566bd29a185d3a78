#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "fcil/fcil.hpp"

namespace fcil::testing {

// The six-transaction example database, tids 0..5.
inline TransactionDatabase basket6() {
  return parse_transactions(
      "A C T W\n"
      "C D W\n"
      "A C T W\n"
      "A C D W\n"
      "A C D T W\n"
      "C D T\n");
}

struct RandomDbParams {
  std::size_t max_items = 10;
  std::size_t max_transactions = 25;
};

// Random database over ids 0..n-1; transactions may be empty. Density is
// drawn per database so both sparse and near-full inputs occur.
inline TransactionDatabase random_db(std::mt19937& rng, RandomDbParams p = {}) {
  std::uniform_int_distribution<std::size_t> n_items(1, p.max_items);
  std::uniform_int_distribution<std::size_t> n_tx(1, p.max_transactions);
  std::uniform_real_distribution<double> density(0.15, 0.9);
  const std::size_t items = n_items(rng);
  const std::size_t tx = n_tx(rng);
  const double d = density(rng);
  std::bernoulli_distribution coin(d);
  std::vector<Itemset> rows;
  for (std::size_t t = 0; t < tx; ++t) {
    std::vector<ItemId> row;
    for (ItemId i = 0; i < items; ++i) {
      if (coin(rng)) row.push_back(i);
    }
    rows.emplace_back(std::move(row));
  }
  return TransactionDatabase::from_ids(std::move(rows), items);
}

inline Lattice lattice_of(const TransactionDatabase& db, Count minsup,
                          TidsetLayout layout = TidsetLayout::bitmap) {
  const VerticalIndex index(db, layout);
  auto patterns = mine_closed(index, minsup);
  auto gens = minimal_generators(patterns, index);
  return build_lattice(std::move(patterns), std::move(gens), db.tid_count());
}

inline NodeId node_of(const Lattice& lat, const TransactionDatabase& db,
                      std::initializer_list<std::string_view> labels) {
  auto id = lat.find(db.itemset(labels));
  if (!id) throw std::out_of_range("itemset not in lattice");
  return *id;
}

inline std::string show(const TransactionDatabase& db, const Itemset& s) {
  std::string out;
  for (const auto& l : labels_of(db, s)) out += l;
  return out;
}

}  // namespace fcil::testing

namespace fcil {

inline void PrintTo(const Itemset& s, std::ostream* os) {
  *os << '{';
  for (std::size_t k = 0; k < s.size(); ++k) *os << (k ? "," : "") << s[k];
  *os << '}';
}

inline void PrintTo(const Rule& r, std::ostream* os) {
  PrintTo(r.antecedent, os);
  *os << "->";
  PrintTo(r.consequent, os);
  *os << " (" << r.support << ", " << r.confidence.num << '/' << r.confidence.den << ')';
}

}  // namespace fcil
