#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fcil/closed_miner.hpp"
#include "fcil/mingen.hpp"

namespace fcil {

using NodeId = std::uint32_t;

struct LatticeNode {
  NodeId id = 0;
  ClosedPattern pattern;
  std::vector<Itemset> generators;
  std::vector<NodeId> children;  // ascending
  std::vector<NodeId> parents;   // ascending
};

class Lattice;
inline Lattice build_lattice(std::vector<ClosedPattern> patterns,
                             std::vector<GeneratorSet> generators, std::size_t tid_count);

// Frequent closed itemsets linked by the cover relation of set inclusion.
// Node 0 is a virtual root holding the empty itemset with support tid_count;
// the remaining ids follow (support descending, itemset lexicographic).
// Immutable once built.
class Lattice {
 public:
  static constexpr NodeId kRoot = 0;

  NodeId root() const noexcept { return kRoot; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t pattern_count() const noexcept { return nodes_.empty() ? 0 : nodes_.size() - 1; }
  const std::vector<LatticeNode>& nodes() const noexcept { return nodes_; }

  const LatticeNode& node(NodeId id) const {
    if (id >= nodes_.size()) throw std::out_of_range("lattice node id out of range");
    return nodes_[id];
  }

  std::optional<NodeId> find(const Itemset& items) const {
    auto it = by_itemset_.find(items);
    if (it == by_itemset_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& v : nodes_) n += v.children.size();
    return n;
  }

 private:
  friend Lattice build_lattice(std::vector<ClosedPattern>, std::vector<GeneratorSet>,
                               std::size_t);

  std::vector<LatticeNode> nodes_;
  std::map<Itemset, NodeId> by_itemset_;
};

// Links `patterns` (a complete closed family) into their lattice.
// `generators[i]` must describe `patterns[i]`.
inline Lattice build_lattice(std::vector<ClosedPattern> patterns,
                             std::vector<GeneratorSet> generators, std::size_t tid_count) {
  if (patterns.size() != generators.size()) {
    throw std::invalid_argument("generator map does not match pattern set");
  }
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (generators[i].closed != patterns[i].itemset) {
      throw std::invalid_argument("generator map does not match pattern set");
    }
  }

  std::vector<std::size_t> order(patterns.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_before(patterns[a].itemset, patterns[a].support, patterns[b].itemset,
                            patterns[b].support);
  });

  Lattice lat;
  lat.nodes_.reserve(patterns.size() + 1);
  LatticeNode root;
  root.id = Lattice::kRoot;
  root.pattern.support = static_cast<Count>(tid_count);
  lat.nodes_.push_back(std::move(root));
  for (std::size_t k = 0; k < order.size(); ++k) {
    LatticeNode n;
    n.id = static_cast<NodeId>(k + 1);
    n.pattern = std::move(patterns[order[k]]);
    n.generators = std::move(generators[order[k]].generators);
    if (!lat.by_itemset_.emplace(n.pattern.itemset, n.id).second) {
      throw std::invalid_argument("duplicate closed itemset");
    }
    lat.nodes_.push_back(std::move(n));
  }

  // Visit nodes by increasing itemset size. A node's parents are the maximal
  // strict subsets among nodes already placed; scanning candidates from the
  // largest down, a candidate is a cover unless it lies inside an accepted one.
  std::vector<NodeId> by_size;
  for (NodeId id = 1; id < lat.nodes_.size(); ++id) by_size.push_back(id);
  std::stable_sort(by_size.begin(), by_size.end(), [&](NodeId a, NodeId b) {
    return lat.nodes_[a].pattern.itemset.size() < lat.nodes_[b].pattern.itemset.size();
  });

  std::vector<NodeId> candidates;
  std::vector<NodeId> accepted;
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    const NodeId id = by_size[k];
    const auto& self = lat.nodes_[id].pattern;
    candidates.clear();
    for (std::size_t m = 0; m < k; ++m) {
      const auto& other = lat.nodes_[by_size[m]].pattern;
      if (other.itemset.size() == self.itemset.size()) break;
      if (other.support >= self.support && other.itemset.is_subset_of(self.itemset)) {
        candidates.push_back(by_size[m]);
      }
    }
    accepted.clear();
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
      const auto& cand = lat.nodes_[*it].pattern.itemset;
      const bool covered = std::any_of(accepted.begin(), accepted.end(), [&](NodeId a) {
        return cand.is_proper_subset_of(lat.nodes_[a].pattern.itemset);
      });
      if (!covered) accepted.push_back(*it);
    }
    if (accepted.empty()) accepted.push_back(Lattice::kRoot);
    for (NodeId p : accepted) {
      lat.nodes_[p].children.push_back(id);
      lat.nodes_[id].parents.push_back(p);
    }
  }
  for (auto& n : lat.nodes_) {
    std::sort(n.children.begin(), n.children.end());
    std::sort(n.parents.begin(), n.parents.end());
  }
  return lat;
}

// Every node reachable through child edges, excluding `start`; ascending ids.
inline std::vector<NodeId> descendants(const Lattice& lattice, NodeId start) {
  lattice.node(start);
  std::vector<bool> seen(lattice.size(), false);
  std::deque<NodeId> queue{start};
  std::vector<NodeId> out;
  while (!queue.empty()) {
    const NodeId cur = queue.front();
    queue.pop_front();
    for (NodeId c : lattice.node(cur).children) {
      if (!seen[c]) {
        seen[c] = true;
        out.push_back(c);
        queue.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fcil
