#include "cantordiff/digitset.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantordiff {

DigitSet::DigitSet(int base, std::vector<long long> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base_ < 2) throw std::invalid_argument("DigitSet: base must be >= 2");
  if (digits_.empty()) throw std::invalid_argument("DigitSet: no digits");
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
}

bool DigitSet::contains(long long d) const {
  return std::binary_search(digits_.begin(), digits_.end(), d);
}

bool DigitSet::within_signed_range() const {
  return min_digit() >= -(base_ - 1) && max_digit() <= base_ - 1;
}

Rational DigitSet::value_lo() const {
  return Rational(min_digit(), base_ - 1);
}

Rational DigitSet::value_hi() const {
  return Rational(max_digit(), base_ - 1);
}

namespace {

void require_same_base(const DigitSet& a, const DigitSet& b,
                       const char* what) {
  if (a.base() != b.base()) {
    throw std::invalid_argument(std::string(what) + ": base mismatch");
  }
}

}  // namespace

DigitSet ds_sum(const DigitSet& a, const DigitSet& b) {
  require_same_base(a, b, "ds_sum");
  std::vector<long long> out;
  out.reserve(a.size() * b.size());
  for (long long x : a.digits()) {
    for (long long y : b.digits()) out.push_back(x + y);
  }
  return DigitSet(a.base(), std::move(out));
}

DigitSet ds_diff(const DigitSet& a, const DigitSet& b) {
  require_same_base(a, b, "ds_diff");
  std::vector<long long> out;
  out.reserve(a.size() * b.size());
  for (long long x : a.digits()) {
    for (long long y : b.digits()) out.push_back(x - y);
  }
  return DigitSet(a.base(), std::move(out));
}

DigitSet ds_scale(long long k, const DigitSet& a) {
  std::vector<long long> out;
  out.reserve(a.size());
  for (long long x : a.digits()) out.push_back(k * x);
  return DigitSet(a.base(), std::move(out));
}

DigitStats stats(const DigitSet& a) {
  if (a.size() < 2) {
    throw std::domain_error("stats: gap statistic undefined on a singleton");
  }
  const auto& d = a.digits();
  long long delta = 0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    delta = std::max(delta, d[i + 1] - d[i]);
  }
  const long long diam = a.diameter();
  return DigitStats{diam, delta, Rational(delta, delta + diam)};
}

bool is_interval(const DigitSet& a) {
  if (a.size() < 2) return false;
  const DigitStats s = stats(a);
  return s.delta * (a.base() - 1) <= s.diam;
}

bool is_full_difference(const DigitSet& a, const DigitSet& b) {
  require_same_base(a, b, "is_full_difference");
  const int p = a.base();
  for (const DigitSet* s : {&a, &b}) {
    if (s->min_digit() < 0 || s->max_digit() > p - 1 || !s->contains(0) ||
        !s->contains(p - 1)) {
      throw std::invalid_argument(
          "is_full_difference: operands must lie in <0,p-1> and contain 0 "
          "and p-1");
    }
  }
  return stats(ds_diff(a, b)).delta <= 2;
}

std::optional<DigitSet> parse_digitset(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.substr(0, 2) != "p=") return std::nullopt;
  text.remove_prefix(2);
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto base_rat = parse_rational(strip(text.substr(0, colon)));
  if (!base_rat || denominator(*base_rat) != 1) return std::nullopt;
  if (*base_rat < 2 || *base_rat > 1000000) return std::nullopt;
  const int base = static_cast<int>(numerator(*base_rat).convert_to<long long>());

  std::string_view body = strip(text.substr(colon + 1));
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    return std::nullopt;
  }
  body = strip(body.substr(1, body.size() - 2));
  if (body.empty()) return std::nullopt;

  std::vector<long long> digits;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view item = strip(comma == std::string_view::npos
                                      ? body.substr(start)
                                      : body.substr(start, comma - start));
    auto value = parse_rational(item);
    if (!value || denominator(*value) != 1) return std::nullopt;
    digits.push_back(numerator(*value).convert_to<long long>());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DigitSet(base, std::move(digits));
}

std::string to_string(const DigitSet& d) {
  std::string out = "p=" + std::to_string(d.base()) + ":{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d.digits()[i]);
  }
  out += "}";
  return out;
}

}  // namespace cantordiff
