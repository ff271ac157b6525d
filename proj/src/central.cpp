#include "cantordiff/central.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace cantordiff::central {

Rational CentralCantor::piece_length(std::size_t n) const {
  Rational d = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    d *= (1 - seq_.term(i)) / 2;
  }
  return d;
}

std::vector<Rational> CentralCantor::piece_lengths(std::size_t n) const {
  std::vector<Rational> d;
  d.reserve(n + 1);
  d.emplace_back(1);
  for (std::size_t i = 1; i <= n; ++i) {
    d.push_back(d.back() * (1 - seq_.term(i)) / 2);
  }
  return d;
}

JSignature JSignature::from_branches(const std::vector<int>& p,
                                     const std::vector<int>& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("JSignature: branch length mismatch");
  }
  JSignature s;
  s.digits.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((p[i] & ~1) || (q[i] & ~1)) {
      throw std::invalid_argument("JSignature: branches must be 0/1");
    }
    s.digits.push_back(static_cast<std::uint8_t>(2 * p[i] - q[i] + 1));
  }
  return s;
}

IntervalUnion approximation(const CentralCantor& c, std::size_t depth) {
  if (depth > 24) {
    throw std::invalid_argument("approximation: depth too large (2^n pieces)");
  }
  const std::vector<Rational> d = c.piece_lengths(depth);
  std::vector<Rational> starts{Rational(0)};
  for (std::size_t i = 1; i <= depth; ++i) {
    const Rational shift = d[i - 1] - d[i];
    const std::size_t count = starts.size();
    starts.reserve(2 * count);
    for (std::size_t k = 0; k < count; ++k) {
      starts.push_back(starts[k] + shift);
    }
  }
  std::vector<Interval> raw;
  raw.reserve(starts.size());
  for (const Rational& s : starts) {
    raw.emplace_back(s, s + d[depth]);
  }
  return union_normalize(std::move(raw));
}

namespace {

struct Bounds {
  Rational lo;
  Rational hi;
};

// One child step of the difference-interval recursion at depth k -> k+1.
void apply_digit(Bounds& j, int digit, const std::vector<Rational>& d,
                 const std::vector<Rational>& g, std::size_t k) {
  switch (digit) {
    case 0:
      j.hi = j.lo + d[k + 1] + g[k + 1];
      break;
    case 1:
      j.lo += g[k] - g[k + 1];
      j.hi += d[k + 1] - d[k];
      break;
    case 2:
      j.lo += d[k] - d[k + 1];
      j.hi += g[k + 1] - g[k];
      break;
    case 3:
      j.lo = j.hi - d[k + 1] - g[k + 1];
      break;
    default:
      throw std::invalid_argument("signature digit outside {0,1,2,3}");
  }
}

void enumerate_leaves(const Bounds& j, std::size_t k, std::size_t depth,
                      const std::vector<Rational>& d,
                      const std::vector<Rational>& g,
                      std::vector<Interval>& out) {
  if (k == depth) {
    out.emplace_back(j.lo, j.hi);
    return;
  }
  for (int digit = 0; digit < 4; ++digit) {
    Bounds child = j;
    apply_digit(child, digit, d, g, k);
    enumerate_leaves(child, k + 1, depth, d, g, out);
  }
}

}  // namespace

Interval j_interval(const CentralCantor& a, const CentralCantor& b,
                    const JSignature& s) {
  const std::size_t depth = s.digits.size();
  const std::vector<Rational> d = a.piece_lengths(depth);
  const std::vector<Rational> g = b.piece_lengths(depth);
  Bounds j{Rational(-1), Rational(1)};
  for (std::size_t k = 0; k < depth; ++k) {
    apply_digit(j, s.digits[k], d, g, k);
  }
  return Interval(j.lo, j.hi);
}

IntervalUnion difference_at_depth_serial(const CentralCantor& a,
                                         const CentralCantor& b,
                                         std::size_t depth) {
  if (depth > 10) {
    throw std::invalid_argument("difference_at_depth: 4^n blowup, depth > 10");
  }
  const std::vector<Rational> d = a.piece_lengths(depth);
  const std::vector<Rational> g = b.piece_lengths(depth);
  std::vector<Interval> leaves;
  leaves.reserve(std::size_t{1} << (2 * depth));
  enumerate_leaves(Bounds{Rational(-1), Rational(1)}, 0, depth, d, g, leaves);
  return union_normalize(std::move(leaves));
}

IntervalUnion difference_at_depth(const CentralCantor& a,
                                  const CentralCantor& b, std::size_t depth) {
  if (depth > 10) {
    throw std::invalid_argument("difference_at_depth: 4^n blowup, depth > 10");
  }
  if (depth <= 4) {
    return difference_at_depth_serial(a, b, depth);
  }
  const std::vector<Rational> d = a.piece_lengths(depth);
  const std::vector<Rational> g = b.piece_lengths(depth);

  const std::size_t split = 4;  // 256 top-level blocks
  const long long blocks = 1ll << (2 * split);
  std::vector<IntervalUnion> per_block(static_cast<std::size_t>(blocks));

  // Each block normalizes its own subtree; the final merge then runs over
  // the few surviving parts instead of all 4^n leaves.
#pragma omp parallel for schedule(dynamic)
  for (long long block = 0; block < blocks; ++block) {
    Bounds j{Rational(-1), Rational(1)};
    for (std::size_t level = 0; level < split; ++level) {
      const int digit =
          static_cast<int>((block >> (2 * (split - 1 - level))) & 3);
      apply_digit(j, digit, d, g, level);
    }
    std::vector<Interval> local;
    local.reserve(std::size_t{1} << (2 * (depth - split)));
    enumerate_leaves(j, split, depth, d, g, local);
    per_block[static_cast<std::size_t>(block)] =
        union_normalize(std::move(local));
  }

  std::vector<Interval> all;
  for (const auto& local : per_block) {
    all.insert(all.end(), local.parts().begin(), local.parts().end());
  }
  return union_normalize(std::move(all));
}

Rational thickness(const CentralCantor& c) {
  auto ratio_of = [](const Rational& a) { return (1 - a) / (2 * a); };
  std::optional<Rational> best;
  for (const Rational& a : c.seq().prefix()) {
    Rational t = ratio_of(a);
    if (!best || t < *best) best = t;
  }
  for (const Rational& a : c.seq().cycle()) {
    Rational t = ratio_of(a);
    if (!best || t < *best) best = t;
  }
  return *best;  // SequenceSpec guarantees at least one term
}

bool newhouse_test(const CentralCantor& a, const CentralCantor& b) {
  if (a.seq().finite() || b.seq().finite()) {
    throw std::invalid_argument(
        "newhouse_test: requires eventually periodic sequences");
  }
  return thickness(a) * thickness(b) >= 1;
}

bool condition_star(const CentralCantor& a, const CentralCantor& b,
                    std::size_t n) {
  const std::vector<Rational> d = a.piece_lengths(n + 1);
  const std::vector<Rational> g = b.piece_lengths(n + 1);
  return g[n + 1] / d[n] >= a.ratio(n + 1) ||
         d[n + 1] / g[n] >= b.ratio(n + 1);
}

bool condition_star_star(const CentralCantor& a, const CentralCantor& b,
                         std::size_t n) {
  const std::vector<Rational> d = a.piece_lengths(n);
  const std::vector<Rational> g = b.piece_lengths(n);
  return d[n] / g[n] >= b.ratio(n + 1) && g[n] / d[n] >= a.ratio(n + 1);
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::FullInterval: return "FullInterval";
    case VerdictKind::FiniteUnionOfIntervals: return "FiniteUnionOfIntervals";
    case VerdictKind::NotFullInterval: return "NotFullInterval";
    case VerdictKind::NotFiniteUnion: return "NotFiniteUnion";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// Conditions at one index, expressed on the ratio rho = d_n/g_n:
//   star:      rho <= star_lo  or  rho >= star_hi
//   star-star: ss_lo <= rho <= ss_hi
struct RatioThresholds {
  Rational star_lo;
  Rational star_hi;
  Rational ss_lo;
  Rational ss_hi;
};

RatioThresholds thresholds(const Rational& a_next, const Rational& b_next) {
  return RatioThresholds{
      (1 - b_next) / (2 * a_next),
      2 * b_next / (1 - a_next),
      b_next,
      Rational(1) / a_next,
  };
}

bool star_at(const RatioThresholds& t, const Rational& rho) {
  return rho <= t.star_lo || rho >= t.star_hi;
}

bool ss_at(const RatioThresholds& t, const Rational& rho) {
  return t.ss_lo <= rho && rho <= t.ss_hi;
}

// Behaviour of one cycle residue class whose ratio is rho0 * c^q for q >= 0.
struct ClassReport {
  bool both_all = false;
  bool both_eventually = false;
  std::optional<unsigned long> star_first_fail_q;
  bool star_fails_infinitely = false;
  bool budget_exhausted = false;
};

ClassReport analyze_class(const RatioThresholds& t, const Rational& rho0,
                          const Rational& c, unsigned budget) {
  ClassReport rep;
  if (c == 1) {
    const bool ok = star_at(t, rho0) && ss_at(t, rho0);
    rep.both_all = rep.both_eventually = ok;
    if (!star_at(t, rho0)) {
      rep.star_first_fail_q = 0;
      rep.star_fails_infinitely = true;
    }
    return rep;
  }

  // Strictly monotone ratio: star-star has a bounded acceptance window, so
  // it fails from some point on, ruling out both "always" and "eventually".
  rep.both_all = false;
  rep.both_eventually = false;
  rep.star_fails_infinitely = false;

  if (t.star_lo >= t.star_hi) {
    return rep;  // rejection window empty; star never fails
  }
  // star fails exactly while rho sits in the open window (star_lo, star_hi).
  const bool increasing = c > 1;
  if (increasing ? rho0 >= t.star_hi : rho0 <= t.star_lo) {
    return rep;  // already past the window, moving away
  }
  Rational rho = rho0;
  for (unsigned long q = 0; q <= budget; ++q) {
    const bool past_lo = increasing ? rho > t.star_lo : rho < t.star_hi;
    if (past_lo) {
      const bool inside = increasing ? rho < t.star_hi : rho > t.star_lo;
      if (inside) rep.star_first_fail_q = q;
      return rep;  // either first failure or the window was skipped over
    }
    rho *= c;
  }
  rep.budget_exhausted = true;
  return rep;
}

CentralVerdict classify_finite(const CentralCantor& a, const CentralCantor& b) {
  std::size_t checkable = 0;  // largest n with both terms at n+1 defined
  bool any = false;
  for (std::size_t n = 0;; ++n) {
    if (!a.seq().has_term(n + 1) || !b.seq().has_term(n + 1)) break;
    checkable = n;
    any = true;
  }
  CentralVerdict v;
  if (!any) {
    v.kind = VerdictKind::Inconclusive;
    v.explanation = "finite sequence too short to evaluate any condition";
    return v;
  }
  for (std::size_t n = 0; n <= checkable; ++n) {
    if (!condition_star(a, b, n)) {
      v.kind = VerdictKind::NotFullInterval;
      v.failing_index = static_cast<long long>(n);
      v.not_full_interval = true;
      v.explanation = "star condition fails at n=" + std::to_string(n) +
                      " (finite sequence)";
      return v;
    }
  }
  v.kind = VerdictKind::Inconclusive;
  v.explanation = "finite sequence: conditions hold for n <= " +
                  std::to_string(checkable) +
                  ", tail terms are unspecified";
  return v;
}

}  // namespace

CentralVerdict classify(const CentralCantor& a, const CentralCantor& b,
                        unsigned budget_periods) {
  if (a.seq().finite() || b.seq().finite()) {
    return classify_finite(a, b);
  }

  const std::size_t n0_align =
      std::max(a.seq().prefix_size(), b.seq().prefix_size());
  const std::size_t period = std::lcm(a.seq().cycle_size(),
                                      b.seq().cycle_size());

  const std::vector<Rational> d = a.piece_lengths(n0_align + period);
  const std::vector<Rational> g = b.piece_lengths(n0_align + period);

  // Direct evaluation on the pre-periodic indices.
  bool direct_all_ok = true;
  std::optional<long long> direct_first_star_fail;
  std::optional<long long> direct_last_both_fail;
  for (std::size_t n = 0; n < n0_align; ++n) {
    const RatioThresholds t = thresholds(a.ratio(n + 1), b.ratio(n + 1));
    const Rational rho = d[n] / g[n];
    const bool star = star_at(t, rho);
    const bool ss = ss_at(t, rho);
    if (!star && !direct_first_star_fail) {
      direct_first_star_fail = static_cast<long long>(n);
    }
    if (!(star && ss)) {
      direct_all_ok = false;
      direct_last_both_fail = static_cast<long long>(n);
    }
  }

  // Ratio multiplier over one aligned cycle.
  Rational cycle_factor = 1;
  for (std::size_t i = n0_align + 1; i <= n0_align + period; ++i) {
    cycle_factor *= (1 - a.ratio(i)) / (1 - b.ratio(i));
  }

  bool classes_all = true;
  bool classes_eventually = true;
  bool star_infinite = false;
  bool exhausted = false;
  std::optional<long long> class_first_star_fail;
  for (std::size_t j = 0; j < period; ++j) {
    const std::size_t n = n0_align + j;
    const RatioThresholds t = thresholds(a.ratio(n + 1), b.ratio(n + 1));
    const ClassReport rep =
        analyze_class(t, d[n] / g[n], cycle_factor, budget_periods);
    classes_all = classes_all && rep.both_all;
    classes_eventually = classes_eventually && rep.both_eventually;
    star_infinite = star_infinite || rep.star_fails_infinitely;
    exhausted = exhausted || rep.budget_exhausted;
    if (rep.star_first_fail_q) {
      const long long fail_n = static_cast<long long>(n) +
                               static_cast<long long>(*rep.star_first_fail_q) *
                                   static_cast<long long>(period);
      if (!class_first_star_fail || fail_n < *class_first_star_fail) {
        class_first_star_fail = fail_n;
      }
    }
  }

  std::optional<long long> first_star_fail = direct_first_star_fail;
  if (!first_star_fail) first_star_fail = class_first_star_fail;

  CentralVerdict v;
  if (direct_all_ok && classes_all) {
    v.kind = VerdictKind::FullInterval;
    v.stabilization_depth = 0;
    return v;
  }
  if (classes_eventually) {
    // Periodic part is clean, so every violation sits before the alignment
    // point and the union freezes right after the last one.
    const long long stable_from =
        direct_last_both_fail ? *direct_last_both_fail + 1 : 0;
    v.kind = VerdictKind::FiniteUnionOfIntervals;
    v.stabilization_depth = stable_from;
    if (stable_from <= 10) {
      v.witness =
          difference_at_depth(a, b, static_cast<std::size_t>(stable_from));
    } else {
      v.explanation = "stabilization depth too deep to materialize a witness";
    }
    if (first_star_fail) {
      v.failing_index = first_star_fail;
      v.not_full_interval = true;
    }
    return v;
  }
  if (star_infinite) {
    v.kind = VerdictKind::NotFiniteUnion;
    v.failing_index = first_star_fail;
    v.not_full_interval = true;
    v.not_finite_union = true;
    v.explanation = "star condition fails on a whole cycle residue class";
    return v;
  }
  if (first_star_fail) {
    v.kind = VerdictKind::NotFullInterval;
    v.failing_index = first_star_fail;
    v.not_full_interval = true;
    v.explanation =
        "star condition fails at n=" + std::to_string(*first_star_fail) +
        "; star-star fails for infinitely many n, so no stabilization "
        "certificate exists";
    return v;
  }
  v.kind = VerdictKind::Inconclusive;
  v.explanation =
      exhausted
          ? "ratio crossover not resolved within " +
                std::to_string(budget_periods) +
                " cycle periods (budget exhausted)"
          : "star holds for all n but star-star fails for infinitely many n; "
            "outside the certified range";
  return v;
}

}  // namespace cantordiff::central
