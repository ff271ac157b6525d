#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantordiff/digitset.hpp"
#include "cantordiff/oracle.hpp"
#include "cantordiff/scantor.hpp"

#include <set>

using namespace cantordiff;

namespace {

DigitSet ds(int p, std::initializer_list<long long> digits) {
  return DigitSet(p, std::vector<long long>(digits));
}

// All length-n partial sums, scaled by p^n, enumerated without the DP.
std::set<long long> brute_prefixes(const DigitSet& d, int n) {
  std::set<long long> cur{0};
  for (int i = 0; i < n; ++i) {
    std::set<long long> next;
    for (long long k : cur) {
      for (long long dg : d.digits()) next.insert(k * d.base() + dg);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST_CASE("construction sorts, dedups and validates") {
  const DigitSet a = ds(3, {2, 0, 2});
  CHECK(a.digits() == std::vector<long long>{0, 2});
  CHECK_THROWS_AS(DigitSet(1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(DigitSet(3, {}), std::invalid_argument);
  CHECK(ds(3, {-2, 0, 2}).within_signed_range());
  CHECK(!ds(3, {-3, 0}).within_signed_range());
  CHECK(ds(3, {0, 2}).value_lo() == 0);
  CHECK(ds(3, {0, 2}).value_hi() == 1);
}

TEST_CASE("sumset, difference set, scaling") {
  const DigitSet c = ds(3, {0, 2});
  CHECK(ds_diff(c, c) == ds(3, {-2, 0, 2}));
  CHECK(ds_sum(c, c) == ds(3, {0, 2, 4}));
  CHECK(ds_scale(1, c) == c);
  CHECK(ds_scale(-2, c) == ds(3, {-4, 0}));
  CHECK_THROWS_AS(ds_diff(c, ds(4, {0, 3})), std::invalid_argument);

  // pairwise enumeration oracle
  const DigitSet a = ds(4, {0, 3});      // keeps 1 low and 1 high of base 4
  const DigitSet b = ds(4, {0, 1, 3});   // keeps 2 low and 1 high
  std::set<long long> expect;
  for (long long x : a.digits()) {
    for (long long y : b.digits()) expect.insert(x - y);
  }
  CHECK(ds_diff(a, b).digits() ==
        std::vector<long long>(expect.begin(), expect.end()));
  CHECK(ds_diff(a, a) == ds(4, {-3, 0, 3}));
}

TEST_CASE("digit statistics") {
  const auto s1 = stats(ds(3, {0, 2}));
  CHECK(s1.diam == 2);
  CHECK(s1.delta == 2);
  CHECK(s1.ratio == Rational(1, 2));

  const auto s2 = stats(ds(7, {-6, -5, -4, -1, 0, 1, 4, 5, 6}));
  CHECK(s2.diam == 12);
  CHECK(s2.delta == 3);
  CHECK(s2.ratio == Rational(1, 5));

  const auto s3 = stats(ds(5, {0, 1, 2, 3, 4}));
  CHECK(s3.delta == 1);
  CHECK(s3.ratio == Rational(1, 5));

  CHECK_THROWS_AS(stats(ds(3, {1})), std::domain_error);
}

TEST_CASE("interval criterion") {
  CHECK(is_interval(ds(3, {0, 1, 2})));
  CHECK(!is_interval(ds(3, {0, 2})));
  CHECK(is_interval(ds(3, {-2, 0, 2})));  // difference digits of the 1/3 set
  CHECK(!is_interval(ds(3, {1})));
  CHECK(is_interval(ds(2, {-1, 1})));
}

TEST_CASE("full-difference criterion") {
  const DigitSet c = ds(3, {0, 2});
  CHECK(is_full_difference(c, c));
  const DigitSet q = ds(4, {0, 3});
  CHECK(!is_full_difference(q, q));  // gap statistic is 3
  const DigitSet full = ds(5, {0, 1, 2, 3, 4});
  CHECK(is_full_difference(full, full));
  CHECK_THROWS_AS(is_full_difference(ds(3, {0, 1}), c), std::invalid_argument);
  CHECK_THROWS_AS(is_full_difference(ds(3, {-2, 0, 2}), c),
                  std::invalid_argument);
}

TEST_CASE("difference homomorphism at finite depth") {
  // prefix sums of the difference set = pairwise differences of prefix sums
  auto check_pair = [](const DigitSet& a, const DigitSet& b, int max_depth) {
    const DigitSet d = ds_diff(a, b);
    for (int n = 0; n <= max_depth; ++n) {
      std::set<long long> pairwise;
      for (long long x : brute_prefixes(a, n)) {
        for (long long y : brute_prefixes(b, n)) pairwise.insert(x - y);
      }
      CHECK(brute_prefixes(d, n) == pairwise);
      const auto dp = oracle::prefixes(d, n);
      CHECK(std::set<long long>(dp.values.begin(), dp.values.end()) ==
            pairwise);
    }
  };

  // exhaustively over all digit subsets for small bases
  for (int p = 3; p <= 4; ++p) {
    std::vector<DigitSet> sets;
    for (unsigned mask = 1; mask < (1u << p); ++mask) {
      std::vector<long long> digits;
      for (int d = 0; d < p; ++d) {
        if (mask & (1u << d)) digits.push_back(d);
      }
      sets.emplace_back(p, digits);
    }
    for (const DigitSet& a : sets) {
      for (const DigitSet& b : sets) check_pair(a, b, 3);
    }
  }

  // deeper spot checks on keep-low/keep-high sets
  for (int p = 5; p <= 6; ++p) {
    check_pair(scantor::digit_set_of(scantor::SCantorParams(1, 1, p)),
               scantor::digit_set_of(scantor::SCantorParams(2, 1, p)), 4);
  }
}

TEST_CASE("strict digit subsets are nowhere dense and unclumped") {
  for (int p = 3; p <= 6; ++p) {
    for (unsigned mask = 1; mask < (1u << p); ++mask) {
      if (mask == (1u << p) - 1) continue;  // full digit set excluded
      std::vector<long long> digits;
      for (int d = 0; d < p; ++d) {
        if (mask & (1u << d)) digits.push_back(d);
      }
      if (digits.size() < 2) continue;
      const DigitSet a(p, digits);
      bool gap_found = false;
      for (int n = 1; n <= 5 && !gap_found; ++n) {
        gap_found = oracle::certify_gap(a, n).size() > 0;
      }
      CHECK(gap_found);
      // every reachable prefix keeps branching
      const auto ps = oracle::prefixes(a, 4);
      CHECK(ps.values.size() >= (std::size_t{1} << 4));
    }
  }
}

TEST_CASE("interval criterion agrees with cover connectivity") {
  for (int p = 2; p <= 6; ++p) {
    const int span = 2 * p - 1;
    for (unsigned mask = 0; mask < (1u << (span - 2)); ++mask) {
      std::vector<long long> digits{-(p - 1), p - 1};
      for (int bit = 0; bit < span - 2; ++bit) {
        if (mask & (1u << bit)) digits.push_back(-(p - 1) + 1 + bit);
      }
      const DigitSet a(p, digits);
      if (a.size() < 2) continue;
      const bool flat = is_interval(a);
      for (int n = 1; n <= 6; ++n) {
        CHECK(oracle::cover_connected(a, n) == flat);
      }
    }
  }
}

TEST_CASE("digit-set literals") {
  const auto parsed = parse_digitset("p=7:{-6,-5,-4,-1,0,1,4,5,6}");
  REQUIRE(parsed.has_value());
  CHECK(*parsed == ds(7, {-6, -5, -4, -1, 0, 1, 4, 5, 6}));
  CHECK(to_string(*parsed) == "p=7:{-6,-5,-4,-1,0,1,4,5,6}");
  CHECK(parse_digitset("p=3:{ 0 , 2 }").has_value());
  CHECK(!parse_digitset("p=x:{0}").has_value());
  CHECK(!parse_digitset("p=3:{}").has_value());
  CHECK(!parse_digitset("3:{0,2}").has_value());
}
