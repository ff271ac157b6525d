#include "cantordiff/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantordiff {

Interval::Interval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) {
    throw std::invalid_argument("Interval: lo > hi");
  }
}

bool IntervalUnion::contains(const Rational& x) const {
  // first part with lo > x; the candidate is its predecessor
  auto it = std::upper_bound(
      parts_.begin(), parts_.end(), x,
      [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return x <= it->hi;
}

bool IntervalUnion::contains_union(const IntervalUnion& other) const {
  std::size_t i = 0;
  for (const Interval& o : other.parts_) {
    while (i < parts_.size() && parts_[i].hi < o.lo) ++i;
    if (i == parts_.size()) return false;
    if (!(parts_[i].lo <= o.lo && o.hi <= parts_[i].hi)) return false;
  }
  return true;
}

Rational IntervalUnion::measure() const {
  Rational total = 0;
  for (const Interval& iv : parts_) total += iv.length();
  return total;
}

const Rational& IntervalUnion::lo() const {
  if (parts_.empty()) throw std::domain_error("IntervalUnion::lo: empty union");
  return parts_.front().lo;
}

const Rational& IntervalUnion::hi() const {
  if (parts_.empty()) throw std::domain_error("IntervalUnion::hi: empty union");
  return parts_.back().hi;
}

IntervalUnion union_normalize(std::vector<Interval> raw) {
  IntervalUnion out;
  if (raw.empty()) return out;
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  out.parts_.reserve(raw.size());
  out.parts_.push_back(raw.front());
  for (std::size_t i = 1; i < raw.size(); ++i) {
    Interval& cur = out.parts_.back();
    if (raw[i].lo <= cur.hi) {
      if (raw[i].hi > cur.hi) cur.hi = raw[i].hi;
    } else {
      out.parts_.push_back(raw[i]);
    }
  }
  return out;
}

IntervalUnion minkowski_diff(const IntervalUnion& u, const IntervalUnion& v) {
  std::vector<Interval> raw;
  raw.reserve(u.part_count() * v.part_count());
  for (const Interval& a : u.parts()) {
    for (const Interval& b : v.parts()) {
      raw.emplace_back(a.lo - b.hi, a.hi - b.lo);
    }
  }
  return union_normalize(std::move(raw));
}

std::vector<Interval> gaps_of(const IntervalUnion& u) {
  if (u.empty()) throw std::domain_error("gaps_of: empty union");
  std::vector<Interval> gaps;
  const auto& parts = u.parts();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    gaps.emplace_back(parts[i].hi, parts[i + 1].lo);
  }
  return gaps;
}

std::string to_string(const Interval& iv) {
  return "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
}

std::string to_string(const IntervalUnion& u) {
  std::string out = "{";
  for (std::size_t i = 0; i < u.part_count(); ++i) {
    if (i) out += " ";
    out += to_string(u.parts()[i]);
  }
  out += "}";
  return out;
}

}  // namespace cantordiff
