#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace fcil {

using ItemId = std::uint32_t;
using Tid = std::uint32_t;
using Count = std::uint32_t;

// Itemset: a set of item ids kept in ascending order, so equality and
// ordering are structural (lexicographic over the id sequence).
class Itemset {
 public:
  using value_type = ItemId;
  using const_iterator = std::vector<ItemId>::const_iterator;

  Itemset() = default;

  Itemset(std::initializer_list<ItemId> items) : items_(items) { normalize(); }

  explicit Itemset(std::vector<ItemId> items) : items_(std::move(items)) {
    normalize();
  }

  template <std::input_iterator It>
  Itemset(It first, It last) : items_(first, last) {
    normalize();
  }

  // Caller guarantees `sorted` is strictly ascending.
  static Itemset from_sorted(std::vector<ItemId> sorted) {
    Itemset out;
    out.items_ = std::move(sorted);
    return out;
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  ItemId operator[](std::size_t i) const { return items_[i]; }
  ItemId back() const { return items_.back(); }
  std::span<const ItemId> items() const noexcept { return items_; }

  bool contains(ItemId item) const {
    return std::binary_search(items_.begin(), items_.end(), item);
  }

  bool is_subset_of(const Itemset& other) const {
    return size() <= other.size() &&
           std::includes(other.begin(), other.end(), begin(), end());
  }

  bool is_proper_subset_of(const Itemset& other) const {
    return size() < other.size() && is_subset_of(other);
  }

  bool disjoint_with(const Itemset& other) const {
    auto a = begin();
    auto b = other.begin();
    while (a != end() && b != other.end()) {
      if (*a == *b) return false;
      if (*a < *b) {
        ++a;
      } else {
        ++b;
      }
    }
    return true;
  }

  Itemset union_with(const Itemset& other) const {
    std::vector<ItemId> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Itemset minus(const Itemset& other) const {
    std::vector<ItemId> out;
    out.reserve(size());
    std::set_difference(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Itemset with(ItemId item) const {
    std::vector<ItemId> out;
    out.reserve(size() + 1);
    auto pos = std::lower_bound(items_.begin(), items_.end(), item);
    out.insert(out.end(), items_.begin(), pos);
    if (pos == items_.end() || *pos != item) out.push_back(item);
    out.insert(out.end(), pos, items_.end());
    return from_sorted(std::move(out));
  }

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend auto operator<=>(const Itemset& a, const Itemset& b) {
    return a.items_ <=> b.items_;
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<ItemId> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (ItemId i : s) {
      h ^= i + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace fcil
