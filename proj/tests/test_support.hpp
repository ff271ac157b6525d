#pragma once

#include "cantordiff/central.hpp"
#include "cantordiff/interval.hpp"
#include "cantordiff/sequence.hpp"

#include <random>
#include <vector>

namespace testsupport {

using cantordiff::Interval;
using cantordiff::IntervalUnion;
using cantordiff::Rational;
using cantordiff::SequenceSpec;

inline Rational random_unit_rational(std::mt19937& rng, int max_den = 12) {
  std::uniform_int_distribution<int> den_dist(2, max_den);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(1, den - 1);
  return Rational(num_dist(rng), den);
}

/// Ratio drawn from (0, 1/3] (keeps the difference set whole) or from
/// (1/3, 1) depending on `small`.
inline Rational random_ratio(std::mt19937& rng, bool small) {
  for (;;) {
    const Rational r = random_unit_rational(rng);
    if (small && r <= Rational(1, 3)) return r;
    if (!small && r > Rational(1, 3)) return r;
  }
}

inline SequenceSpec random_spec(std::mt19937& rng, std::size_t max_prefix = 3,
                                std::size_t max_cycle = 3) {
  std::uniform_int_distribution<std::size_t> pre_dist(0, max_prefix);
  std::uniform_int_distribution<std::size_t> cyc_dist(1, max_cycle);
  std::vector<Rational> prefix, cycle;
  const std::size_t np = pre_dist(rng);
  const std::size_t nc = cyc_dist(rng);
  for (std::size_t i = 0; i < np; ++i) {
    prefix.push_back(random_unit_rational(rng));
  }
  for (std::size_t i = 0; i < nc; ++i) {
    cycle.push_back(random_unit_rational(rng));
  }
  return SequenceSpec(std::move(prefix), std::move(cycle));
}

inline IntervalUnion make_union(
    std::initializer_list<std::pair<Rational, Rational>> parts) {
  std::vector<Interval> raw;
  for (const auto& [lo, hi] : parts) raw.emplace_back(lo, hi);
  return cantordiff::union_normalize(std::move(raw));
}

}  // namespace testsupport
