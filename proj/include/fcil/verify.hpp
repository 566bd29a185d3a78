#pragma once

#include <string>
#include <vector>

#include "fcil/oracle.hpp"
#include "fcil/pipeline.hpp"

namespace fcil {

struct VerifyReport {
  bool checked = false;  // false when the input exceeds the oracle caps
  std::string skipped_reason;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Cross-checks a pipeline run stage by stage against the brute-force oracle.
inline VerifyReport verify_against_oracle(const TransactionDatabase& db,
                                          const MiningResult& result) {
  VerifyReport report;
  try {
    const auto closed = oracle::brute_force_closed(db, result.minsup);
    const auto& nodes = result.lattice.nodes();
    if (closed.size() != result.lattice.pattern_count()) {
      report.mismatches.push_back("closed itemset count " +
                                  std::to_string(result.lattice.pattern_count()) +
                                  " != oracle " + std::to_string(closed.size()));
    } else {
      for (std::size_t k = 0; k < closed.size(); ++k) {
        const auto& n = nodes[k + 1];
        if (n.pattern.itemset != closed[k].itemset || n.pattern.support != closed[k].support) {
          report.mismatches.push_back("closed itemset #" + std::to_string(k) + " differs");
          continue;
        }
        if (n.generators != oracle::brute_force_mingens(db, n.pattern.itemset)) {
          report.mismatches.push_back("minimal generators of node " + std::to_string(n.id) +
                                      " differ");
        }
      }
    }
    std::vector<std::pair<Itemset, Itemset>> edges;
    for (const auto& n : nodes) {
      for (NodeId c : n.children) edges.emplace_back(n.pattern.itemset, nodes[c].pattern.itemset);
    }
    std::sort(edges.begin(), edges.end());
    if (edges != oracle::brute_force_covers(closed)) {
      report.mismatches.push_back("lattice cover edges differ");
    }
    const auto rules = oracle::brute_force_mnar(db, result.minsup, result.minconf);
    if (rules != result.rules) {
      report.mismatches.push_back("rule set differs: " + std::to_string(result.rules.size()) +
                                  " mined vs " + std::to_string(rules.size()) + " oracle");
    }
    report.checked = true;
  } catch (const OracleLimitError& e) {
    report.skipped_reason = e.what();
  }
  return report;
}

}  // namespace fcil
