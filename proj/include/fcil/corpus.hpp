#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fcil/error.hpp"
#include "fcil/itemset.hpp"
#include "fcil/tidset.hpp"

namespace fcil {

// Transactions indexed by 0-based tid, plus the label <-> dense id mapping.
// Empty transactions are legal and count toward tid_count().
class TransactionDatabase {
 public:
  TransactionDatabase() = default;

  TransactionDatabase(std::vector<Itemset> transactions,
                      std::vector<std::string> labels)
      : transactions_(std::move(transactions)), labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!ids_.emplace(labels_[i], static_cast<ItemId>(i)).second) {
        throw std::invalid_argument("duplicate item label: " + labels_[i]);
      }
    }
    for (const auto& t : transactions_) {
      if (!t.empty() && t.back() >= labels_.size()) {
        throw std::invalid_argument("transaction references unknown item id");
      }
    }
  }

  // Builds a database over items labelled "0", "1", ...; convenient for tests.
  static TransactionDatabase from_ids(std::vector<Itemset> transactions,
                                      std::size_t item_count) {
    std::vector<std::string> labels;
    labels.reserve(item_count);
    for (std::size_t i = 0; i < item_count; ++i) labels.push_back(std::to_string(i));
    return TransactionDatabase(std::move(transactions), std::move(labels));
  }

  std::size_t tid_count() const noexcept { return transactions_.size(); }
  std::size_t item_count() const noexcept { return labels_.size(); }
  const std::vector<Itemset>& transactions() const noexcept { return transactions_; }
  const Itemset& transaction(Tid t) const { return transactions_.at(t); }

  const std::string& label(ItemId id) const { return labels_.at(id); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<ItemId> id_of(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  // Looks up every label; throws std::out_of_range on an unknown one.
  Itemset itemset(std::initializer_list<std::string_view> labels) const {
    std::vector<ItemId> ids;
    for (auto l : labels) {
      auto id = id_of(l);
      if (!id) throw std::out_of_range("unknown item label: " + std::string(l));
      ids.push_back(*id);
    }
    return Itemset(std::move(ids));
  }

  std::size_t total_items() const noexcept {
    std::size_t n = 0;
    for (const auto& t : transactions_) n += t.size();
    return n;
  }

 private:
  std::vector<Itemset> transactions_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ItemId> ids_;
};

namespace detail {

inline bool is_blank(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace detail

// One transaction per non-blank line; tokens are runs of non-blank bytes,
// numbered densely in order of first appearance.
inline TransactionDatabase parse_transactions(std::istream& in) {
  std::vector<Itemset> transactions;
  std::vector<std::string> labels;
  std::unordered_map<std::string, ItemId> ids;
  std::string line;
  std::vector<ItemId> row;
  while (std::getline(in, line)) {
    row.clear();
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && detail::is_blank(line[pos])) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && !detail::is_blank(line[pos])) ++pos;
      if (pos == start) break;
      std::string token = line.substr(start, pos - start);
      auto [it, inserted] = ids.try_emplace(token, static_cast<ItemId>(labels.size()));
      if (inserted) labels.push_back(token);
      row.push_back(it->second);
    }
    if (!row.empty()) transactions.emplace_back(row);
  }
  if (in.bad()) throw IoError("read failure while parsing transactions");
  return TransactionDatabase(std::move(transactions), std::move(labels));
}

inline TransactionDatabase parse_transactions(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_transactions(in);
}

inline TransactionDatabase load_transactions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return parse_transactions(in);
}

// Vertical layout of a database: tidset(i) = { t : i in transaction t }.
class VerticalIndex {
 public:
  VerticalIndex() = default;

  explicit VerticalIndex(const TransactionDatabase& db)
      : VerticalIndex(db, default_layout(db.tid_count())) {}

  VerticalIndex(const TransactionDatabase& db, TidsetLayout layout)
      : tid_count_(db.tid_count()), layout_(layout) {
    tidsets_.assign(db.item_count(), Tidset(tid_count_, layout_));
    for (std::size_t t = 0; t < db.tid_count(); ++t) {
      for (ItemId i : db.transactions()[t]) tidsets_[i].push_back(static_cast<Tid>(t));
    }
  }

  std::size_t tid_count() const noexcept { return tid_count_; }
  std::size_t item_count() const noexcept { return tidsets_.size(); }
  TidsetLayout layout() const noexcept { return layout_; }
  const Tidset& tidset(ItemId i) const { return tidsets_.at(i); }
  bool empty() const noexcept { return tidsets_.empty(); }

  // Tidset of an itemset; the empty itemset maps to every transaction and an
  // unknown item to the empty set.
  Tidset tidset_of(const Itemset& x) const {
    if (x.empty()) return Tidset::full(tid_count_, layout_);
    if (x.back() >= tidsets_.size()) return Tidset(tid_count_, layout_);
    Tidset acc = tidsets_[x[0]];
    for (std::size_t k = 1; k < x.size() && !acc.empty(); ++k) {
      acc = acc.intersect(tidsets_[x[k]]);
    }
    return acc;
  }

 private:
  std::size_t tid_count_ = 0;
  TidsetLayout layout_ = TidsetLayout::bitmap;
  std::vector<Tidset> tidsets_;
};

inline VerticalIndex vertical_index(const TransactionDatabase& db) {
  return VerticalIndex(db);
}

inline Count support(const VerticalIndex& index, const Itemset& x) {
  if (x.empty()) return static_cast<Count>(index.tid_count());
  if (x.size() == 1) {
    return x[0] < index.item_count() ? index.tidset(x[0]).cardinality() : 0;
  }
  return index.tidset_of(x).cardinality();
}

}  // namespace fcil
