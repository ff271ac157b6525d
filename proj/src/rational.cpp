#include "cantordiff/rational.hpp"

#include <cctype>

namespace cantordiff {

BigInt floor_to_int(const Rational& x) {
  BigInt num = numerator(x);
  BigInt den = denominator(x);  // always > 0
  BigInt q = num / den;         // truncates toward zero
  if (num < 0 && q * den != num) {
    --q;
  }
  return q;
}

BigInt ceil_to_int(const Rational& x) {
  return -floor_to_int(-x);
}

Rational pow_rational(const Rational& base, unsigned long exp) {
  using boost::multiprecision::pow;
  Rational out;
  BigInt n = pow(numerator(base), static_cast<unsigned>(exp));
  BigInt d = pow(denominator(base), static_cast<unsigned>(exp));
  return Rational(n, d);
}

std::string to_string(const Rational& x) {
  std::string out = numerator(x).str();
  if (denominator(x) != 1) {
    out += "/";
    out += denominator(x).str();
  }
  return out;
}

namespace {

bool parse_int(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = (text[0] == '-');
    i = 1;
  }
  if (i == text.size()) return false;
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = neg ? -value : value;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den <= 0) return std::nullopt;
  }
  return Rational(num, den);
}

}  // namespace cantordiff
