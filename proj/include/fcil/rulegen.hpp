#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

#include "fcil/lattice.hpp"
#include "fcil/ratio.hpp"

namespace fcil {

// antecedent -> consequent, with support = support(antecedent u consequent)
// and confidence = support / support(antecedent), unreduced.
struct Rule {
  Itemset antecedent;
  Itemset consequent;
  Count support = 0;
  Ratio confidence;

  bool exact() const { return confidence.num == confidence.den; }

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.antecedent == b.antecedent && a.consequent == b.consequent &&
           a.support == b.support && a.confidence.identical(b.confidence);
  }
};

// Output order: confidence desc, support desc, antecedent, consequent.
inline bool rule_before(const Rule& a, const Rule& b) {
  if (a.confidence != b.confidence) return a.confidence > b.confidence;
  if (a.support != b.support) return a.support > b.support;
  if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
  return a.consequent < b.consequent;
}

inline void sort_rules(std::vector<Rule>& rules) {
  std::sort(rules.begin(), rules.end(), rule_before);
}

// Whether the breadth-first walk below a source node stops expanding at nodes
// that fail minconf. `exhaustive` visits every descendant; it exists to check
// that the gate never loses a rule.
enum class Traversal { confidence_gated, exhaustive };

// For each minimal generator Z of `src`: Z -> dst \ Z, unless that is empty.
inline void find_rules(const Lattice& lattice, NodeId src, NodeId dst, Ratio conf,
                       std::vector<Rule>& out) {
  const auto& from = lattice.node(src);
  const auto& to = lattice.node(dst);
  for (const Itemset& z : from.generators) {
    Itemset rhs = to.pattern.itemset.minus(z);
    if (!rhs.empty()) out.push_back({z, std::move(rhs), to.pattern.support, conf});
  }
}

inline std::vector<Rule> find_rules(const Lattice& lattice, NodeId src, NodeId dst, Ratio conf) {
  std::vector<Rule> out;
  find_rules(lattice, src, dst, conf, out);
  return out;
}

namespace detail {

inline void generate_rules(const Lattice& lattice, NodeId src, Ratio minconf, Traversal mode,
                           std::vector<Rule>& out, std::vector<bool>& marked) {
  const auto& source = lattice.node(src);
  const std::uint64_t denom = source.pattern.support;
  find_rules(lattice, src, src, Ratio{denom, denom}, out);

  std::fill(marked.begin(), marked.end(), false);
  std::deque<NodeId> queue;
  for (NodeId c : source.children) {
    queue.push_back(c);
    marked[c] = true;
  }
  while (!queue.empty()) {
    const NodeId cur = queue.front();
    queue.pop_front();
    const auto& node = lattice.node(cur);
    const Ratio conf{node.pattern.support, denom};
    const bool passes = conf >= minconf;
    if (passes) find_rules(lattice, src, cur, conf, out);
    if (passes || mode == Traversal::exhaustive) {
      for (NodeId g : node.children) {
        if (!marked[g]) {
          queue.push_back(g);
          marked[g] = true;
        }
      }
    }
  }
}

inline void extend_rules(const Lattice& lattice, NodeId id, Ratio minconf, Traversal mode,
                         std::vector<Rule>& out, std::vector<bool>& visited,
                         std::vector<bool>& marked) {
  if (visited[id]) return;
  generate_rules(lattice, id, minconf, mode, out, marked);
  visited[id] = true;
  for (NodeId c : lattice.node(id).children) {
    extend_rules(lattice, c, minconf, mode, out, visited, marked);
  }
}

}  // namespace detail

// Rules whose antecedent is a minimal generator of `src`: the exact ones to
// src itself, then approximate ones to each descendant meeting minconf.
inline std::vector<Rule> rules_from_node(const Lattice& lattice, NodeId src, Ratio minconf,
                                         Traversal mode = Traversal::confidence_gated) {
  if (src == lattice.root()) {
    throw std::invalid_argument("rules cannot originate at the lattice root");
  }
  make_minconf(minconf);
  std::vector<Rule> out;
  std::vector<bool> marked(lattice.size(), false);
  detail::generate_rules(lattice, src, minconf, mode, out, marked);
  sort_rules(out);
  return out;
}

// The minimal non-redundant rule set: every non-root node generates its rules
// exactly once, reached by depth-first descent from the root's children.
inline std::vector<Rule> mine_mnar(const Lattice& lattice, Ratio minconf,
                                   Traversal mode = Traversal::confidence_gated) {
  make_minconf(minconf);
  std::vector<Rule> out;
  if (lattice.size() == 0) return out;
  std::vector<bool> visited(lattice.size(), false);
  std::vector<bool> marked(lattice.size(), false);
  for (NodeId c : lattice.node(lattice.root()).children) {
    detail::extend_rules(lattice, c, minconf, mode, out, visited, marked);
  }
  sort_rules(out);
  return out;
}

}  // namespace fcil
