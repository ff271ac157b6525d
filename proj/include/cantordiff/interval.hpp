#pragma once

#include "cantordiff/rational.hpp"

#include <string>
#include <vector>

namespace cantordiff {

/// Closed interval [lo, hi] with exact rational endpoints. Degenerate
/// single-point intervals are allowed.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of pairwise disjoint closed intervals, kept sorted by left
/// endpoint with consecutive parts strictly separated. Touching or
/// overlapping inputs are merged on construction, so structural equality is
/// equality of point sets.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t part_count() const { return parts_.size(); }

  bool contains(const Rational& x) const;
  bool contains_union(const IntervalUnion& other) const;

  /// Total length, exact.
  Rational measure() const;

  /// Hull endpoints; throw std::domain_error on an empty union.
  const Rational& lo() const;
  const Rational& hi() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;
  friend IntervalUnion union_normalize(std::vector<Interval> raw);

 private:
  std::vector<Interval> parts_;
};

/// Canonical merged form: a point lies in the result iff it lies in some
/// input interval. Idempotent and independent of input order; closed
/// intervals sharing an endpoint merge into one part.
IntervalUnion union_normalize(std::vector<Interval> raw);

/// { x - y : x in u, y in v }, computed pairwise on parts and normalized.
IntervalUnion minkowski_diff(const IntervalUnion& u, const IntervalUnion& v);

/// Bounded open components of the complement, in increasing order. The
/// returned intervals are to be read as open. Throws std::domain_error on an
/// empty union.
std::vector<Interval> gaps_of(const IntervalUnion& u);

std::string to_string(const Interval& iv);
std::string to_string(const IntervalUnion& u);

}  // namespace cantordiff
