#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "fcil/error.hpp"

namespace fcil {

// Non-negative rational kept unreduced: a rule confidence 3/3 stays 3/3 so the
// printed numerator and denominator are the two supports. Comparison is exact.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  constexpr Ratio() = default;
  constexpr Ratio(std::uint64_t n, std::uint64_t d) : num(n), den(d) {}

  static constexpr Ratio one() { return {1, 1}; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  Ratio reduced() const {
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? *this : Ratio{num / g, den / g};
  }

  // Value equality: 4/5 == 8/10.
  friend constexpr bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const auto lhs = static_cast<unsigned __int128>(a.num) * b.den;
    const auto rhs = static_cast<unsigned __int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Representation equality: 4/5 and 8/10 differ.
  constexpr bool identical(const Ratio& o) const { return num == o.num && den == o.den; }
};

namespace detail {

inline std::uint64_t parse_digits(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 18) throw ConfigError("malformed " + std::string(what));
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ConfigError("malformed " + std::string(what));
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace detail

// Accepts "4/5", "0.8", ".8", "1", and "80%". Decimals are taken literally:
// "0.8" is 8/10.
inline Ratio parse_ratio(std::string_view text) {
  const std::string_view what = "ratio";
  if (text.empty()) throw ConfigError("empty ratio");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto n = detail::parse_digits(text.substr(0, slash), what);
    const auto d = detail::parse_digits(text.substr(slash + 1), what);
    if (d == 0) throw ConfigError("ratio with zero denominator");
    return {n, d};
  }
  std::uint64_t scale = 1;
  if (text.back() == '%') {
    text.remove_suffix(1);
    scale = 100;
  }
  if (text.empty()) throw ConfigError("malformed ratio");
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return {detail::parse_digits(text, what), scale};
  const auto whole = text.substr(0, dot);
  const auto frac = text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw ConfigError("malformed ratio");
  if (frac.size() > 9) throw ConfigError("ratio with more than 9 decimal places");
  std::uint64_t den = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
  const std::uint64_t w = whole.empty() ? 0 : detail::parse_digits(whole, what);
  const std::uint64_t f = frac.empty() ? 0 : detail::parse_digits(frac, what);
  return {w * den + f, den * scale};
}

// Minimum confidence: an exact rational in (0, 1].
inline Ratio make_minconf(Ratio r) {
  if (r.den == 0 || r.num == 0 || r.num > r.den) {
    throw ConfigError("minconf must lie in (0, 1]");
  }
  return r;
}

inline Ratio parse_minconf(std::string_view text) { return make_minconf(parse_ratio(text)); }

inline std::string to_string(const Ratio& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace fcil
