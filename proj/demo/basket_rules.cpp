// Mines the six-basket sample and prints its lattice and rules.

#include <iostream>

#include "fcil/fcil.hpp"

int main() {
  const auto db = fcil::parse_transactions(
      "A C T W\nC D W\nA C T W\nA C D W\nA C D T W\nC D T\n");
  const auto minsup = fcil::MinsupSpec::parse("50%").resolve(db.tid_count());
  const auto result = fcil::run_pipeline(db, minsup, fcil::parse_minconf("0.8"));

  std::cout << "lattice (" << result.lattice.pattern_count() << " closed itemsets):\n";
  fcil::write_lattice(std::cout, db, result.lattice);
  std::cout << "\nrules:\n";
  fcil::write_rules(std::cout, db, result.rules, fcil::RuleFormat::text);
}
