#pragma once

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcil/corpus.hpp"
#include "fcil/error.hpp"
#include "fcil/lattice.hpp"
#include "fcil/rulegen.hpp"

namespace fcil {

enum class RuleFormat { text, csv, json };

// Item labels of `s`, sorted lexicographically.
inline std::vector<std::string> labels_of(const TransactionDatabase& db, const Itemset& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (ItemId i : s) out.push_back(db.label(i));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

inline std::string label_string(const TransactionDatabase& db, const Itemset& s) {
  return join(labels_of(db, s), " ");
}

inline std::string decimal4(const Ratio& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", r.to_double());
  return buf;
}

// "A T => C W #SUP: 3 #CONF: 3/3 (1.0000)"
inline std::string format_rule_text(const TransactionDatabase& db, const Rule& r) {
  return label_string(db, r.antecedent) + " => " + label_string(db, r.consequent) +
         " #SUP: " + std::to_string(r.support) + " #CONF: " + to_string(r.confidence) + " (" +
         decimal4(r.confidence) + ")";
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline constexpr std::string_view kCsvHeader =
    "antecedent,consequent,support,conf_num,conf_den,confidence";

inline std::string format_rule_csv(const TransactionDatabase& db, const Rule& r) {
  return detail::csv_field(label_string(db, r.antecedent)) + "," +
         detail::csv_field(label_string(db, r.consequent)) + "," + std::to_string(r.support) +
         "," + std::to_string(r.confidence.num) + "," + std::to_string(r.confidence.den) + "," +
         decimal4(r.confidence);
}

inline nlohmann::ordered_json rule_to_json(const TransactionDatabase& db, const Rule& r) {
  nlohmann::ordered_json j;
  j["antecedent"] = labels_of(db, r.antecedent);
  j["consequent"] = labels_of(db, r.consequent);
  j["support"] = r.support;
  j["conf_num"] = r.confidence.num;
  j["conf_den"] = r.confidence.den;
  j["confidence"] = r.confidence.to_double();
  return j;
}

// text and json emit one rule per line; csv adds a header line.
inline void write_rules(std::ostream& out, const TransactionDatabase& db,
                        const std::vector<Rule>& rules, RuleFormat format) {
  if (format == RuleFormat::csv) out << kCsvHeader << '\n';
  for (const auto& r : rules) {
    switch (format) {
      case RuleFormat::text:
        out << format_rule_text(db, r) << '\n';
        break;
      case RuleFormat::csv:
        out << format_rule_csv(db, r) << '\n';
        break;
      case RuleFormat::json:
        out << rule_to_json(db, r).dump() << '\n';
        break;
    }
  }
}

inline RuleFormat parse_rule_format(std::string_view s) {
  if (s == "text") return RuleFormat::text;
  if (s == "csv") return RuleFormat::csv;
  if (s == "json") return RuleFormat::json;
  throw ConfigError("unknown format: " + std::string(s));
}

// A rule as read back from serialized output, labels in place of ids.
struct RuleRecord {
  std::vector<std::string> antecedent;
  std::vector<std::string> consequent;
  std::uint64_t support = 0;
  std::uint64_t conf_num = 0;
  std::uint64_t conf_den = 0;

  friend bool operator==(const RuleRecord&, const RuleRecord&) = default;
  friend auto operator<=>(const RuleRecord&, const RuleRecord&) = default;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back() += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

inline std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

inline std::vector<RuleRecord> read_rules_csv(std::istream& in) {
  std::vector<RuleRecord> out;
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("missing rule CSV header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 6) throw std::invalid_argument("rule CSV row needs 6 fields");
    out.push_back({detail::split_labels(f[0]), detail::split_labels(f[1]), std::stoull(f[2]),
                   std::stoull(f[3]), std::stoull(f[4])});
  }
  return out;
}

inline std::vector<RuleRecord> read_rules_json(std::istream& in) {
  std::vector<RuleRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    out.push_back({j.at("antecedent").get<std::vector<std::string>>(),
                   j.at("consequent").get<std::vector<std::string>>(),
                   j.at("support").get<std::uint64_t>(), j.at("conf_num").get<std::uint64_t>(),
                   j.at("conf_den").get<std::uint64_t>()});
  }
  return out;
}

// One node per line in id order (line k is node k, the root first):
// itemset TAB support TAB generators TAB children. Items are space-separated,
// generators ';'-separated, child ids ','-separated; the root itemset is "{}".
inline void write_lattice(std::ostream& out, const TransactionDatabase& db,
                          const Lattice& lattice) {
  for (const auto& n : lattice.nodes()) {
    out << (n.pattern.itemset.empty() ? std::string("{}") : label_string(db, n.pattern.itemset))
        << '\t' << n.pattern.support << '\t';
    std::vector<std::string> gens;
    for (const auto& g : n.generators) gens.push_back(label_string(db, g));
    out << join(gens, ";") << '\t';
    std::vector<std::string> kids;
    for (NodeId c : n.children) kids.push_back(std::to_string(c));
    out << join(kids, ",") << '\n';
  }
}

}  // namespace fcil
