#include "cantordiff/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <queue>
#include <stdexcept>
#include <utility>

namespace cantordiff::oracle {

bool PrefixSet::contains(long long k) const {
  return std::binary_search(values.begin(), values.end(), k);
}

namespace {

constexpr long long kMaxDenseSpan = 1ll << 28;

long long pow_ll(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void check_dp_bounds(const DigitSet& d, int depth) {
  if (depth < 0) throw std::invalid_argument("prefix depth must be >= 0");
  if (depth > 12) throw std::invalid_argument("prefix depth too large");
  const long long mag =
      std::max(std::llabs(d.min_digit()), std::llabs(d.max_digit()));
  if (mag > (1ll << 20)) {
    throw std::invalid_argument("digit magnitude too large for the prefix DP");
  }
  // worst-case prefix magnitude: mag * (p^depth - 1) / (p - 1)
  long long bound = 0;
  for (int i = 0; i < depth; ++i) {
    bound = bound * d.base() + mag;
    if (bound > (1ll << 55)) {
      throw std::invalid_argument("prefix DP would overflow at this depth");
    }
  }
}

}  // namespace

PrefixSet prefixes(const DigitSet& d, int depth) {
  check_dp_bounds(d, depth);
  PrefixSet out;
  out.base = d.base();
  out.depth = depth;
  out.values = {0};
  long long lo = 0, hi = 0;
  for (int level = 1; level <= depth; ++level) {
    lo = lo * d.base() + d.min_digit();
    hi = hi * d.base() + d.max_digit();
    const long long span = hi - lo + 1;
    if (span > kMaxDenseSpan) {
      throw std::invalid_argument("prefix DP span too large at depth " +
                                  std::to_string(level));
    }
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(span), 0);
    for (long long k : out.values) {
      for (long long dig : d.digits()) {
        seen[static_cast<std::size_t>(k * d.base() + dig - lo)] = 1;
      }
    }
    std::vector<long long> next;
    next.reserve(out.values.size() * d.size());
    for (long long i = 0; i < span; ++i) {
      if (seen[static_cast<std::size_t>(i)]) next.push_back(lo + i);
    }
    out.values = std::move(next);
  }
  return out;
}

namespace {

// Cover components with endpoints scaled to integers over (p-1) * p^depth:
// the cell of prefix k spans [k*(p-1) + min_digit, k*(p-1) + max_digit].
struct IntComponents {
  int base = 0;
  int depth = 0;
  long long denom = 0;
  std::vector<std::pair<long long, long long>> comps;
  // reachable prefixes flanking each inter-component gap
  std::vector<std::pair<long long, long long>> gap_flanks;
};

IntComponents int_components(const DigitSet& d, int depth) {
  const PrefixSet ps = prefixes(d, depth);
  IntComponents out;
  out.base = d.base();
  out.depth = depth;
  out.denom = (d.base() - 1) * pow_ll(d.base(), depth);
  const long long w = d.base() - 1;
  long long prev_k = 0;
  for (long long k : ps.values) {
    const long long lo = k * w + d.min_digit();
    const long long hi = k * w + d.max_digit();
    if (!out.comps.empty() && lo <= out.comps.back().second) {
      out.comps.back().second = std::max(out.comps.back().second, hi);
    } else {
      if (!out.comps.empty()) out.gap_flanks.emplace_back(prev_k, k);
      out.comps.emplace_back(lo, hi);
    }
    prev_k = k;
  }
  return out;
}

// Number of inter-component gaps whose closure fits inside the scaled window.
int gaps_within(const IntComponents& ic, long long w_lo, long long w_hi) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < ic.comps.size(); ++i) {
    const long long g_lo = ic.comps[i].second;
    const long long g_hi = ic.comps[i + 1].first;
    if (g_lo >= w_lo && g_hi <= w_hi) ++count;
  }
  return count;
}

// comps of `fine` (depth m) must each sit inside a comp of `coarse`
// (depth n <= m); endpoints are compared after rescaling to depth m.
bool int_contained(const IntComponents& fine, const IntComponents& coarse) {
  const long long scale = pow_ll(fine.base, fine.depth - coarse.depth);
  std::size_t i = 0;
  for (const auto& [lo, hi] : fine.comps) {
    while (i < coarse.comps.size() && coarse.comps[i].second * scale < lo) ++i;
    if (i == coarse.comps.size()) return false;
    if (!(coarse.comps[i].first * scale <= lo &&
          hi <= coarse.comps[i].second * scale)) {
      return false;
    }
  }
  return true;
}

}  // namespace

Cover cover(const DigitSet& d, int depth) {
  const IntComponents ic = int_components(d, depth);
  std::vector<Interval> parts;
  parts.reserve(ic.comps.size());
  for (const auto& [lo, hi] : ic.comps) {
    parts.emplace_back(Rational(lo, ic.denom), Rational(hi, ic.denom));
  }
  return Cover{depth, union_normalize(std::move(parts))};
}

bool cover_connected(const DigitSet& d, int depth) {
  return int_components(d, depth).comps.size() == 1;
}

const char* to_string(CertKind k) {
  switch (k) {
    case CertKind::IntervalInside: return "IntervalInside";
    case CertKind::GapCertified: return "GapCertified";
    case CertKind::MemberYes: return "MemberYes";
    case CertKind::MemberNo: return "MemberNo";
  }
  return "?";
}

Certificate member(const DigitSet& d, const Rational& x) {
  constexpr std::size_t kStateBudget = 1u << 19;
  const int p = d.base();
  const Rational w_lo = d.value_lo();
  const Rational w_hi = d.value_hi();

  Certificate cert;
  cert.point = x;
  if (x < w_lo || x > w_hi) {
    cert.kind = CertKind::MemberNo;
    cert.note = "outside the hull of the represented set";
    return cert;
  }

  std::map<Rational, int> index;
  std::vector<Rational> states;
  std::vector<std::vector<std::pair<int, long long>>> succ;
  std::vector<std::vector<int>> preds;
  auto intern = [&](const Rational& t) {
    auto [it, inserted] = index.emplace(t, static_cast<int>(states.size()));
    if (inserted) {
      states.push_back(t);
      succ.emplace_back();
      preds.emplace_back();
    }
    return it->second;
  };

  intern(x);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states.size() > kStateBudget) {
      throw std::runtime_error(
          "member: residual automaton state budget exceeded");
    }
    const Rational t = states[i];
    for (long long dig : d.digits()) {
      const Rational u = t * p - dig;
      if (u < w_lo || u > w_hi) continue;
      const int j = intern(u);
      succ[i].emplace_back(j, dig);
      preds[j].push_back(static_cast<int>(i));
    }
  }

  // A state survives iff some successor survives; strip dead ends.
  std::vector<int> outdeg(states.size());
  std::queue<int> dead;
  for (std::size_t i = 0; i < states.size(); ++i) {
    outdeg[i] = static_cast<int>(succ[i].size());
    if (outdeg[i] == 0) dead.push(static_cast<int>(i));
  }
  std::vector<char> alive(states.size(), 1);
  while (!dead.empty()) {
    const int k = dead.front();
    dead.pop();
    alive[static_cast<std::size_t>(k)] = 0;
    for (int pred : preds[static_cast<std::size_t>(k)]) {
      if (--outdeg[static_cast<std::size_t>(pred)] == 0) dead.push(pred);
    }
  }

  if (!alive[0]) {
    cert.kind = CertKind::MemberNo;
    cert.note = "no infinite expansion; " + std::to_string(states.size()) +
                " residual states explored";
    return cert;
  }

  // Extract one eventually periodic expansion by always taking the smallest
  // surviving digit.
  std::vector<int> position(states.size(), -1);
  std::vector<long long> digits;
  int cur = 0;
  while (position[static_cast<std::size_t>(cur)] < 0) {
    position[static_cast<std::size_t>(cur)] = static_cast<int>(digits.size());
    for (const auto& [j, dig] : succ[static_cast<std::size_t>(cur)]) {
      if (alive[static_cast<std::size_t>(j)]) {
        digits.push_back(dig);
        cur = j;
        break;
      }
    }
  }
  const int cycle_from = position[static_cast<std::size_t>(cur)];
  cert.digit_prefix.assign(digits.begin(), digits.begin() + cycle_from);
  cert.digit_cycle.assign(digits.begin() + cycle_from, digits.end());

  // Replay the expansion; a mismatch would mean a defect, not a verdict.
  Rational pre = 0, cyc = 0;
  Rational scale = 1;
  for (long long dig : cert.digit_prefix) {
    scale /= p;
    pre += scale * dig;
  }
  const Rational cycle_scale = scale;
  Rational inner = 1;
  for (long long dig : cert.digit_cycle) {
    inner /= p;
    cyc += inner * dig;
  }
  const Rational value =
      pre + cycle_scale * cyc /
                (1 - pow_rational(Rational(1, p),
                                  static_cast<unsigned long>(
                                      cert.digit_cycle.size())));
  if (value != x) {
    throw std::logic_error("member: expansion replay mismatch");
  }

  cert.kind = CertKind::MemberYes;
  cert.note = "eventually periodic expansion found";
  return cert;
}

namespace {

void require_signed_frame(const DigitSet& d, const char* what) {
  const int p = d.base();
  if (!d.within_signed_range() || !d.contains(-p + 1) || !d.contains(0) ||
      !d.contains(p - 1)) {
    throw std::invalid_argument(
        std::string(what) +
        ": digits must lie in <-p+1,p-1> and contain -p+1, 0 and p-1");
  }
}

}  // namespace

bool bi_obtainable(const DigitSet& d, const Rational& x, int depth) {
  require_signed_frame(d, "bi_obtainable");
  if (x < -1 || x > 1) {
    throw std::invalid_argument("bi_obtainable: point outside [-1,1]");
  }
  const PrefixSet ps = prefixes(d, depth);
  const BigInt pn = boost::multiprecision::pow(BigInt(d.base()), depth);
  const Rational scaled = x * Rational(pn);
  const BigInt f = floor_to_int(scaled);
  std::vector<long long> candidates{f.convert_to<long long>()};
  if (scaled == Rational(f)) candidates.push_back(f.convert_to<long long>() - 1);
  for (long long k : candidates) {
    if (ps.contains(k) && ps.contains(k + 1)) return true;
  }
  return false;
}

CertifyOutcome certify_interval(const DigitSet& d, const Interval& iv,
                                int depth) {
  require_signed_frame(d, "certify_interval");
  if (iv.lo < -1 || iv.hi > 1) {
    throw std::invalid_argument("certify_interval: interval outside [-1,1]");
  }
  const int p = d.base();
  CertifyOutcome out;

  // Whole-hull route: p scaled copies of [-1,1] covering [-1,1] pin the
  // represented set to the entire hull.
  if (stats(d).delta <= 2) {
    Certificate cert;
    cert.kind = CertKind::IntervalInside;
    cert.depth = depth;
    cert.interval = iv;
    cert.note = "self-similar copies of the hull cover [-1,1]";
    out.status = CertifyOutcome::Status::Certified;
    out.certificate = std::move(cert);
    return out;
  }

  bool prop_ok = true;
  long long prop_missing = 0;
  for (long long k = 0; k <= p - 1; ++k) {
    if (!d.contains(k) && !d.contains(k - p)) {
      prop_ok = false;
      prop_missing = k;
      break;
    }
  }
  bool down_ok = true;  // complete tail alphabet <-p+1, 0>
  for (long long k = -p + 1; k <= 0; ++k) down_ok = down_ok && d.contains(k);
  bool up_ok = true;  // complete tail alphabet <0, p-1>
  for (long long k = 0; k <= p - 1; ++k) up_ok = up_ok && d.contains(k);

  const PrefixSet ps = prefixes(d, depth);
  auto cell_ok = [&](long long k) {
    if (prop_ok && ps.contains(k) && ps.contains(k + 1)) return true;
    if (down_ok && ps.contains(k + 1)) return true;
    if (up_ok && ps.contains(k)) return true;
    return false;
  };

  const BigInt pn = boost::multiprecision::pow(BigInt(p), depth);
  std::vector<long long> witness;
  bool all_ok = true;
  long long failed_cell = 0;

  if (iv.lo == iv.hi) {
    const Rational scaled = iv.lo * Rational(pn);
    const BigInt f = floor_to_int(scaled);
    std::vector<long long> candidates{f.convert_to<long long>()};
    if (scaled == Rational(f)) {
      candidates.push_back(f.convert_to<long long>() - 1);
    }
    all_ok = false;
    for (long long k : candidates) {
      if (cell_ok(k)) {
        all_ok = true;
        witness.push_back(k);
        break;
      }
      failed_cell = k;
    }
  } else {
    const long long k_first =
        floor_to_int(iv.lo * Rational(pn)).convert_to<long long>();
    const long long k_last =
        ceil_to_int(iv.hi * Rational(pn)).convert_to<long long>() - 1;
    for (long long k = k_first; k <= k_last; ++k) {
      if (!cell_ok(k)) {
        all_ok = false;
        failed_cell = k;
        break;
      }
      witness.push_back(k);
    }
  }

  if (all_ok) {
    Certificate cert;
    cert.kind = CertKind::IntervalInside;
    cert.depth = depth;
    cert.interval = iv;
    cert.witness_prefixes = std::move(witness);
    cert.note = "every covering cell certified";
    out.status = CertifyOutcome::Status::Certified;
    out.certificate = std::move(cert);
    return out;
  }
  if (!prop_ok && !down_ok && !up_ok) {
    out.status = CertifyOutcome::Status::Unavailable;
    out.reason = "digit propagation precondition fails: neither " +
                 std::to_string(prop_missing) + " nor " +
                 std::to_string(prop_missing - p) + " is a digit";
    return out;
  }
  out.status = CertifyOutcome::Status::Failed;
  out.reason = "cell k=" + std::to_string(failed_cell) + " at depth " +
               std::to_string(depth) + " is not certifiable";
  return out;
}

std::vector<Certificate> certify_gap(const DigitSet& d, int depth) {
  const IntComponents ic = int_components(d, depth);
  std::vector<Certificate> certs;
  for (std::size_t i = 0; i + 1 < ic.comps.size(); ++i) {
    Certificate cert;
    cert.kind = CertKind::GapCertified;
    cert.depth = depth;
    cert.interval = Interval(Rational(ic.comps[i].second, ic.denom),
                             Rational(ic.comps[i + 1].first, ic.denom));
    cert.witness_prefixes = {ic.gap_flanks[i].first, ic.gap_flanks[i].second};
    cert.note = "open interval disjoint from the depth-" +
                std::to_string(depth) + " cover";
    certs.push_back(std::move(cert));
  }
  return certs;
}

bool CrosscheckReport::pass() const {
  for (const CheckResult& c : checks) {
    if (!c.skipped && !c.pass) return false;
  }
  return true;
}

std::string CrosscheckReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.skipped && !c.pass) return c.name + ": " + c.detail;
  }
  return "";
}

namespace {

void add_check(CrosscheckReport& rep, std::string name, bool pass,
               std::string detail = "") {
  rep.checks.push_back(CheckResult{std::move(name), pass, false,
                                   std::move(detail)});
}

void add_skipped(CrosscheckReport& rep, std::string name, std::string detail) {
  rep.checks.push_back(
      CheckResult{std::move(name), true, true, std::move(detail)});
}

}  // namespace

CrosscheckReport crosscheck_scantor(const scantor::SCantorParams& P1,
                                    const scantor::SCantorParams& P2,
                                    int depth) {
  if (depth < 2) {
    throw std::invalid_argument("crosscheck_scantor: depth must be >= 2");
  }
  using scantor::TopologyClass;
  const int p = P1.p;
  const DigitSet D = ds_diff(digit_set_of(P1), digit_set_of(P2));
  const TopologyClass cls = scantor::classify(P1, P2);

  CrosscheckReport rep;
  rep.subject = "scantor (" + std::to_string(P1.l) + "," +
                std::to_string(P1.r) + ") - (" + std::to_string(P2.l) + "," +
                std::to_string(P2.r) + ") base " + std::to_string(p);
  rep.verdict = scantor::to_string(cls);

  // The difference digits must be the signed range minus the two excluded
  // blocks.
  {
    const auto [L, R] = scantor::lr_sets(P1, P2);
    std::vector<long long> expected;
    for (long long k = -p + 1; k <= p - 1; ++k) {
      if (!L.contains(k) && !R.contains(k)) expected.push_back(k);
    }
    add_check(rep, "difference-digits", D.digits() == expected,
              to_string(D));
  }

  std::vector<IntComponents> ic;
  ic.reserve(static_cast<std::size_t>(depth) + 3);
  for (int k = 0; k <= depth + 2; ++k) ic.push_back(int_components(D, k));

  for (int k = 0; k < depth + 2; ++k) {
    add_check(rep, "cover-monotone@" + std::to_string(k + 1),
              int_contained(ic[static_cast<std::size_t>(k + 1)],
                            ic[static_cast<std::size_t>(k)]));
  }

  const long long denom_n = ic[static_cast<std::size_t>(depth)].denom;
  const auto& comps_n = ic[static_cast<std::size_t>(depth)].comps;
  const long long cell_w = p - 1;  // one p^{-depth} cell in scaled units

  auto accumulation_check = [&](long long w_lo, long long w_hi) {
    const long long scale = pow_ll(p, 2);
    const int now =
        gaps_within(ic[static_cast<std::size_t>(depth)], w_lo, w_hi);
    const int later = gaps_within(ic[static_cast<std::size_t>(depth + 2)],
                                  w_lo * scale, w_hi * scale);
    return std::pair<int, int>(now, later);
  };

  switch (cls) {
    case TopologyClass::FullInterval: {
      for (int k = 0; k <= depth; ++k) {
        const auto& c = ic[static_cast<std::size_t>(k)];
        const bool full = c.comps.size() == 1 &&
                          c.comps.front().first == -c.denom &&
                          c.comps.front().second == c.denom;
        add_check(rep, "cover-full@" + std::to_string(k), full);
      }
      const auto outcome =
          certify_interval(D, Interval(Rational(-1), Rational(1)), depth);
      add_check(rep, "interval-certificate", outcome.certified(),
                outcome.reason);
      if (outcome.certificate) {
        rep.certificates.push_back(*outcome.certificate);
      }
      break;
    }
    case TopologyClass::CantorSet: {
      for (int k = 1; k <= depth; ++k) {
        add_check(rep, "gap-exists@" + std::to_string(k),
                  ic[static_cast<std::size_t>(k)].comps.size() >= 2);
      }
      for (std::size_t i = 0; i < comps_n.size(); ++i) {
        const auto& [lo, hi] = comps_n[i];
        if (hi - lo < 2 * cell_w) continue;
        const auto outcome = certify_interval(
            D, Interval(Rational(lo, denom_n), Rational(hi, denom_n)), depth);
        add_check(rep, "no-interval-certificate@" + std::to_string(i),
                  !outcome.certified(), outcome.reason);
      }
      break;
    }
    case TopologyClass::LCantorval:
    case TopologyClass::RCantorval:
    case TopologyClass::MCantorval: {
      for (int k = 1; k <= depth; ++k) {
        add_check(rep, "gap-exists@" + std::to_string(k),
                  ic[static_cast<std::size_t>(k)].comps.size() >= 2);
      }
      for (std::size_t i = 0; i + 1 < comps_n.size(); ++i) {
        const long long g_lo = comps_n[i].second;
        const long long g_hi = comps_n[i + 1].first;
        const std::string tag = "gap" + std::to_string(i);

        if (cls == TopologyClass::LCantorval) {
          const auto outcome = certify_interval(
              D,
              Interval(Rational(g_hi, denom_n),
                       Rational(g_hi + cell_w, denom_n)),
              depth);
          add_check(rep, tag + "-right-adjacent-interval",
                    outcome.certified(), outcome.reason);
          if (outcome.certificate) {
            rep.certificates.push_back(*outcome.certificate);
          }
        }
        if (cls == TopologyClass::RCantorval) {
          const auto outcome = certify_interval(
              D,
              Interval(Rational(g_lo - cell_w, denom_n),
                       Rational(g_lo, denom_n)),
              depth);
          add_check(rep, tag + "-left-adjacent-interval", outcome.certified(),
                    outcome.reason);
          if (outcome.certificate) {
            rep.certificates.push_back(*outcome.certificate);
          }
        }
        if (cls != TopologyClass::RCantorval) {
          const auto [now, later] =
              accumulation_check(g_lo - cell_w, g_lo);
          add_check(rep, tag + "-left-gap-growth", later > now,
                    std::to_string(now) + " -> " + std::to_string(later));
        }
        if (cls != TopologyClass::LCantorval) {
          const auto [now, later] =
              accumulation_check(g_hi, g_hi + cell_w);
          add_check(rep, tag + "-right-gap-growth", later > now,
                    std::to_string(now) + " -> " + std::to_string(later));
        }
      }
      break;
    }
  }

  for (Certificate& cert : certify_gap(D, depth)) {
    rep.certificates.push_back(std::move(cert));
  }
  return rep;
}

CrosscheckReport crosscheck_central(const central::CentralCantor& a,
                                    const central::CentralCantor& b,
                                    const central::CentralVerdict& v,
                                    int depth) {
  using central::VerdictKind;
  if (depth < 1 || depth > 10) {
    throw std::invalid_argument("crosscheck_central: depth must be in 1..10");
  }
  CrosscheckReport rep;
  rep.subject = "central " + a.seq().to_string() + " vs " + b.seq().to_string();
  rep.verdict = central::to_string(v.kind);

  std::vector<IntervalUnion> diff;
  diff.reserve(static_cast<std::size_t>(depth) + 1);
  for (int k = 0; k <= depth; ++k) {
    diff.push_back(
        central::difference_at_depth(a, b, static_cast<std::size_t>(k)));
  }
  for (int k = 0; k < depth; ++k) {
    add_check(rep, "nesting@" + std::to_string(k + 1),
              diff[static_cast<std::size_t>(k)].contains_union(
                  diff[static_cast<std::size_t>(k + 1)]));
  }

  const IntervalUnion full =
      union_normalize({Interval(Rational(-1), Rational(1))});

  const std::vector<Rational> d =
      a.piece_lengths(static_cast<std::size_t>(depth));
  const std::vector<Rational> g =
      b.piece_lengths(static_cast<std::size_t>(depth));

  // Open interval predicted to be missing when the star condition fails at
  // index f: from the right edge of the leftmost depth-(f+1) difference
  // interval to the nearest left edge among its siblings.
  auto hole_at = [&](int f) {
    const Rational lo = -1 + d[static_cast<std::size_t>(f + 1)] +
                        g[static_cast<std::size_t>(f + 1)];
    const Rational hi =
        -1 + std::min(g[static_cast<std::size_t>(f)] -
                          g[static_cast<std::size_t>(f + 1)],
                      d[static_cast<std::size_t>(f)] -
                          d[static_cast<std::size_t>(f + 1)]);
    return Interval(lo, std::max(lo, hi));
  };
  auto check_hole = [&](int f, const std::string& tag) {
    const Interval hole = hole_at(f);
    if (!(hole.lo < hole.hi)) {
      add_check(rep, tag, false, "predicted hole is empty");
      return hole;
    }
    bool disjoint = true;
    for (const Interval& part : diff[static_cast<std::size_t>(f + 1)].parts()) {
      if (part.hi > hole.lo && part.lo < hole.hi) {
        disjoint = false;
        break;
      }
    }
    add_check(rep, tag, disjoint,
              "hole " + to_string(hole) + " at depth " + std::to_string(f + 1));
    return hole;
  };

  switch (v.kind) {
    case VerdictKind::FullInterval: {
      for (int k = 0; k <= depth; ++k) {
        add_check(rep, "full@" + std::to_string(k),
                  diff[static_cast<std::size_t>(k)] == full);
      }
      break;
    }
    case VerdictKind::FiniteUnionOfIntervals: {
      if (!v.witness || !v.stabilization_depth) {
        add_check(rep, "witness-present", false);
        break;
      }
      const long long n0 = *v.stabilization_depth;
      if (n0 > depth) {
        add_skipped(rep, "stabilization",
                    "stabilization depth beyond the check depth");
        break;
      }
      for (long long k = n0; k <= depth; ++k) {
        add_check(rep, "stable@" + std::to_string(k),
                  diff[static_cast<std::size_t>(k)] == *v.witness);
      }
      break;
    }
    case VerdictKind::NotFullInterval: {
      if (!v.failing_index) {
        add_check(rep, "failing-index-present", false);
        break;
      }
      if (*v.failing_index + 1 > depth) {
        add_skipped(rep, "hole", "failing index beyond the check depth");
        break;
      }
      const int f = static_cast<int>(*v.failing_index);
      check_hole(f, "hole@" + std::to_string(f));
      add_check(rep, "not-full@" + std::to_string(f + 1),
                diff[static_cast<std::size_t>(f + 1)] != full);
      break;
    }
    case VerdictKind::NotFiniteUnion: {
      std::vector<int> failing;
      for (int f = 0; f < depth; ++f) {
        if (!central::condition_star(a, b, static_cast<std::size_t>(f))) {
          failing.push_back(f);
        }
      }
      if (failing.empty()) {
        add_skipped(rep, "holes", "no failing index below the check depth");
        break;
      }
      std::vector<Interval> holes;
      for (int f : failing) {
        holes.push_back(check_hole(f, "hole@" + std::to_string(f)));
      }
      bool disjoint = true;
      for (std::size_t i = 0; i + 1 < holes.size(); ++i) {
        if (holes[i + 1].hi > holes[i].lo) disjoint = false;  // later = deeper
      }
      add_check(rep, "holes-pairwise-disjoint", disjoint,
                std::to_string(holes.size()) + " holes");
      break;
    }
    case VerdictKind::Inconclusive: {
      add_skipped(rep, "verdict", "inconclusive: nothing to falsify");
      break;
    }
  }
  return rep;
}

SweepVerification verify_sweep(int p_max, int depth) {
  std::vector<scantor::SweepRow> rows = scantor::sweep(p_max);
  const long long n = static_cast<long long>(rows.size());
  std::vector<std::unique_ptr<CrosscheckReport>> failures(rows.size());

#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    CrosscheckReport rep;
    try {
      rep = crosscheck_scantor(scantor::SCantorParams(row.l1, row.r1, row.p),
                               scantor::SCantorParams(row.l2, row.r2, row.p),
                               depth);
    } catch (const std::exception& e) {
      rep.subject = "tuple (" + std::to_string(row.l1) + "," +
                    std::to_string(row.r1) + "," + std::to_string(row.l2) +
                    "," + std::to_string(row.r2) + "," +
                    std::to_string(row.p) + ")";
      rep.checks.push_back(CheckResult{"exception", false, false, e.what()});
    }
    if (!rep.pass()) {
      failures[static_cast<std::size_t>(i)] =
          std::make_unique<CrosscheckReport>(std::move(rep));
    }
  }

  SweepVerification out;
  out.tuples = rows.size();
  for (auto& f : failures) {
    if (f) {
      ++out.failures;
      out.failed_reports.push_back(std::move(*f));
    }
  }
  return out;
}

}  // namespace cantordiff::oracle
