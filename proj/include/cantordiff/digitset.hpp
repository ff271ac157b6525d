#pragma once

#include "cantordiff/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cantordiff {

/// Finite integer digit set over base p >= 2, standing for the compact set
/// of all series sums x = sum_i x_i p^{-i} with every x_i drawn from the
/// set. Digits are stored sorted and deduplicated. Arbitrary integer digits
/// are representable; operations that need digits inside <-p+1, p-1> check
/// that bound explicitly.
class DigitSet {
 public:
  DigitSet(int base, std::vector<long long> digits);

  int base() const { return base_; }
  const std::vector<long long>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool contains(long long d) const;

  long long min_digit() const { return digits_.front(); }
  long long max_digit() const { return digits_.back(); }
  long long diameter() const { return max_digit() - min_digit(); }

  /// True when every digit lies in <-p+1, p-1>.
  bool within_signed_range() const;

  /// Endpoints of the represented set's hull: [min/(p-1), max/(p-1)].
  Rational value_lo() const;
  Rational value_hi() const;

  friend bool operator==(const DigitSet&, const DigitSet&) = default;

 private:
  int base_;
  std::vector<long long> digits_;
};

/// Elementwise sumset / difference set / scaling; each represents the exact
/// Minkowski image of the point sets. Binary operations require equal bases.
DigitSet ds_sum(const DigitSet& a, const DigitSet& b);
DigitSet ds_diff(const DigitSet& a, const DigitSet& b);
DigitSet ds_scale(long long k, const DigitSet& a);

struct DigitStats {
  long long diam;   // max - min
  long long delta;  // largest gap between consecutive digits
  Rational ratio;   // delta / (delta + diam)
};

/// Order statistics of the digit set; throws std::domain_error on a
/// singleton (the gap statistic is undefined there).
DigitStats stats(const DigitSet& a);

/// Interval criterion: the represented set is an interval iff
/// 1/p >= delta/(delta + diam), i.e. delta * (p-1) <= diam.
/// A singleton yields false (a single point, no interior).
bool is_interval(const DigitSet& a);

/// For A, B inside <0, p-1> both containing 0 and p-1: the difference set
/// of the represented sets is all of [-1,1] iff the largest digit gap of
/// A - B is at most 2.
bool is_full_difference(const DigitSet& a, const DigitSet& b);

/// Literal syntax "p=7:{-6,-5,-4,-1,0,1,4,5,6}".
std::optional<DigitSet> parse_digitset(std::string_view text);
std::string to_string(const DigitSet& d);

}  // namespace cantordiff
