#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "dginv/errors.hpp"

namespace dginv {

// Every scalar in this library is an exact arbitrary-precision rational,
// kept in lowest terms with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den in canonical form. The two-argument cpp_rational
// constructor rejects negative denominators, so go through division.
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  return Rational(num) / Rational(den);
}

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

// Accepts integers ("-12"), fractions ("3/4", "-3/4"), and finite
// decimals ("2.5", "-.25", "3."), all converted exactly.
inline Rational parse_rational(std::string_view token) {
  const std::string_view original = token;
  auto fail = [&]() -> Rational {
    throw ParseError("invalid rational '" + std::string(original) + "'");
  };

  bool negative = false;
  if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  if (token.empty()) return fail();

  Rational value;
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    std::string_view num = token.substr(0, slash);
    std::string_view den = token.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
    Int d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(original) + "'");
    value = make_rational(Int{std::string(num)}, d);
  } else if (auto dot = token.find('.'); dot != std::string_view::npos) {
    std::string_view whole = token.substr(0, dot);
    std::string_view frac = token.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !detail::all_digits(whole)) return fail();
    if (!frac.empty() && !detail::all_digits(frac)) return fail();
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int digits = whole.empty() ? Int(0) : Int{std::string(whole)};
    digits *= scale;
    if (!frac.empty()) digits += Int{std::string(frac)};
    value = make_rational(digits, scale);
  } else {
    if (!detail::all_digits(token)) return fail();
    value = Rational(Int{std::string(token)});
  }
  return negative ? Rational(-value) : value;
}

}  // namespace dginv
