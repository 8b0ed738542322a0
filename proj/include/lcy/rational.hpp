#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "lcy/errors.hpp"

namespace lcy {

// All numeric work in this library is exact: arbitrary-precision integers
// and rationals, no floating point anywhere.  Expression templates are off
// so arithmetic yields concrete values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// Floor of p/q as an integer (exact, works for negative values).
inline Int rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int t = n / d;
  if (n % d != 0 && n < 0) --t;
  return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

// Lowest-terms string form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& q) {
  if (is_integer(q)) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

inline std::optional<Int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return std::nullopt;
  return Int(s);
}

// Accepts "p" or "p/q" with q > 0 after normalization.
inline std::optional<Rat> try_parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(s.substr(0, slash));
  auto d = parse_int(s.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rat(*n, *d);
}

inline Rat parse_rat(const std::string& s) {
  auto q = try_parse_rat(s);
  if (!q) throw ParseError("not a rational: '" + s + "'");
  return *q;
}

// Smallest nonnegative integer l with l*l*den >= num; used for the
// ceil(sqrt(m/k)) lower bound checks.
inline Int ceil_sqrt_quotient(const Int& num, const Int& den) {
  if (num <= 0) return 0;
  Int l = 0;
  while (l * l * den < num) ++l;
  return l;
}

}  // namespace lcy
