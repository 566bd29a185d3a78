#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <vector>

#include "fcil/itemset.hpp"

namespace fcil {

enum class TidsetLayout { bitmap, sorted };

// Databases with at most this many transactions use bitmaps; larger ones use
// sorted tid arrays.
inline constexpr std::size_t kBitmapTidLimit = std::size_t{1} << 16;

inline TidsetLayout default_layout(std::size_t tid_count) noexcept {
  return tid_count <= kBitmapTidLimit ? TidsetLayout::bitmap
                                      : TidsetLayout::sorted;
}

// Set of transaction ids over the universe [0, universe). Both operands of a
// binary operation must share universe and layout.
class Tidset {
 public:
  Tidset() = default;

  Tidset(std::size_t universe, TidsetLayout layout)
      : universe_(universe), layout_(layout) {
    if (layout_ == TidsetLayout::bitmap) words_.assign((universe + 63) / 64, 0);
  }

  static Tidset full(std::size_t universe, TidsetLayout layout) {
    Tidset out(universe, layout);
    for (std::size_t t = 0; t < universe; ++t) out.push_back(static_cast<Tid>(t));
    return out;
  }

  template <class Range>
  static Tidset of(std::size_t universe, TidsetLayout layout, const Range& tids) {
    Tidset out(universe, layout);
    std::vector<Tid> sorted(std::begin(tids), std::end(tids));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Tid t : sorted) out.push_back(t);
    return out;
  }

  // Appends a tid larger than every tid already present.
  void push_back(Tid t) {
    if (t >= universe_) throw std::out_of_range("tid outside tidset universe");
    if (layout_ == TidsetLayout::bitmap) {
      std::uint64_t& w = words_[t >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (t & 63);
      if (!(w & bit)) {
        w |= bit;
        ++count_;
      }
    } else {
      if (!tids_.empty() && tids_.back() >= t) {
        throw std::invalid_argument("tids must be appended in ascending order");
      }
      tids_.push_back(t);
      ++count_;
    }
  }

  std::size_t universe() const noexcept { return universe_; }
  TidsetLayout layout() const noexcept { return layout_; }
  Count cardinality() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Tid t) const {
    if (t >= universe_) return false;
    if (layout_ == TidsetLayout::bitmap) return (words_[t >> 6] >> (t & 63)) & 1u;
    return std::binary_search(tids_.begin(), tids_.end(), t);
  }

  Tidset intersect(const Tidset& other) const {
    check_compatible(other);
    Tidset out;
    out.universe_ = universe_;
    out.layout_ = layout_;
    if (layout_ == TidsetLayout::bitmap) {
      out.words_.resize(words_.size());
      Count c = 0;
      for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i] = words_[i] & other.words_[i];
        c += static_cast<Count>(std::popcount(out.words_[i]));
      }
      out.count_ = c;
    } else {
      out.tids_.reserve(std::min(tids_.size(), other.tids_.size()));
      std::set_intersection(tids_.begin(), tids_.end(), other.tids_.begin(),
                            other.tids_.end(), std::back_inserter(out.tids_));
      out.count_ = static_cast<Count>(out.tids_.size());
    }
    return out;
  }

  Count intersect_count(const Tidset& other) const {
    check_compatible(other);
    Count c = 0;
    if (layout_ == TidsetLayout::bitmap) {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        c += static_cast<Count>(std::popcount(words_[i] & other.words_[i]));
      }
    } else {
      auto a = tids_.begin();
      auto b = other.tids_.begin();
      while (a != tids_.end() && b != other.tids_.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++c;
          ++a;
          ++b;
        }
      }
    }
    return c;
  }

  bool is_subset_of(const Tidset& other) const {
    check_compatible(other);
    if (count_ > other.count_) return false;
    if (layout_ == TidsetLayout::bitmap) {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) return false;
      }
      return true;
    }
    return std::includes(other.tids_.begin(), other.tids_.end(), tids_.begin(),
                         tids_.end());
  }

  std::vector<Tid> to_vector() const {
    std::vector<Tid> out;
    out.reserve(count_);
    for_each([&](Tid t) { out.push_back(t); });
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    if (layout_ == TidsetLayout::bitmap) {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
          fn(static_cast<Tid>(i * 64 + std::countr_zero(w)));
          w &= w - 1;
        }
      }
    } else {
      for (Tid t : tids_) fn(t);
    }
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull ^ count_;
    for_each([&](Tid t) { h = (h ^ t) * 0x100000001b3ull; });
    return h;
  }

  friend bool operator==(const Tidset& a, const Tidset& b) {
    if (a.count_ != b.count_ || a.universe_ != b.universe_) return false;
    if (a.layout_ == b.layout_) {
      return a.layout_ == TidsetLayout::bitmap ? a.words_ == b.words_
                                               : a.tids_ == b.tids_;
    }
    return a.to_vector() == b.to_vector();
  }

 private:
  void check_compatible(const Tidset& other) const {
    if (universe_ != other.universe_ || layout_ != other.layout_) {
      throw std::invalid_argument("tidsets over different universes/layouts");
    }
  }

  std::size_t universe_ = 0;
  TidsetLayout layout_ = TidsetLayout::bitmap;
  Count count_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<Tid> tids_;
};

}  // namespace fcil
