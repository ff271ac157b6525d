#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace cantordiff {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. The backend keeps every value in
/// canonical form (reduced, positive denominator), and all arithmetic and
/// comparisons are exact. No floating point is used anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  return Rational(num, den);
}

BigInt floor_to_int(const Rational& x);
BigInt ceil_to_int(const Rational& x);

/// base^exp with exact rational arithmetic.
Rational pow_rational(const Rational& base, unsigned long exp);

/// Canonical text form: "num/den", integers printed without the "/1".
std::string to_string(const Rational& x);

/// Accepts "a" or "a/b" with optional leading '-'; rejects everything else
/// (including b == 0).
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace cantordiff
