#pragma once

#include "cantordiff/digitset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cantordiff::scantor {

/// Parameters of the self-similar set that keeps the l lowest and r highest
/// of p equal subdivisions at every construction step.
struct SCantorParams {
  int l;
  int r;
  int p;

  SCantorParams(int l_, int r_, int p_);

  friend bool operator==(const SCantorParams&, const SCantorParams&) = default;
};

/// The five digit-count inequalities steering the classification. The
/// starred variants are the strict forms.
struct SConditions {
  bool s1;
  bool s2;
  bool s3;
  bool s1_star;
  bool s2_star;

  /// s1_star implies s1, s2_star implies s2, s3 excludes s1 and s2.
  bool consistent() const;
};

enum class TopologyClass {
  FullInterval,
  CantorSet,
  LCantorval,
  RCantorval,
  MCantorval,
};

const char* to_string(TopologyClass c);

/// Reflection x -> -x swaps the two one-sided Cantorval classes and fixes
/// the rest.
TopologyClass mirror(TopologyClass c);

/// Digits <0, l-1> union <p-r, p-1> in base p.
DigitSet digit_set_of(const SCantorParams& P);

/// Evaluates all five inequalities exactly. Requires equal bases.
SConditions conditions(const SCantorParams& P1, const SCantorParams& P2);

/// Complete five-way classification of the difference set. Exactly one
/// clause fires for any valid parameters; that is asserted at runtime.
TopologyClass classify(const SCantorParams& P1, const SCantorParams& P2);

/// Difference of a set with itself; only FullInterval, CantorSet and
/// MCantorval can occur.
TopologyClass classify_self(const SCantorParams& P);

/// Symmetric sets (l = r). Requires 2*l1 < p and 2*l2 < p.
TopologyClass classify_symmetric(int l1, int l2, int p);

/// Self-difference of a symmetric set, decided on l/p against 1/4 and 1/3.
TopologyClass kraft_threshold(int l, int p);

/// Closed integer range <lo, hi>, empty when lo > hi.
struct IntRange {
  long long lo;
  long long hi;

  bool empty() const { return lo > hi; }
  long long size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(long long v) const { return lo <= v && v <= hi; }

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// The two excluded-digit ranges of the difference digit set: the set of
/// difference digits equals <-p+1, p-1> minus their union.
std::pair<IntRange, IntRange> lr_sets(const SCantorParams& P1,
                                      const SCantorParams& P2);

struct SweepRow {
  int l1, r1, l2, r2, p;
  TopologyClass cls;
};

/// One row per valid tuple with p <= p_max, ordered lexicographically by
/// (l1, r1, l2, r2, p). Classification runs in parallel; order is fixed.
std::vector<SweepRow> sweep(int p_max);

/// Number of valid tuples with p <= p_max (closed form).
std::size_t sweep_row_count(int p_max);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace cantordiff::scantor
