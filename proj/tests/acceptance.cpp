// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every expected value here is exact; runtime bounds are enforced.

#include "cantordiff/central.hpp"
#include "cantordiff/oracle.hpp"
#include "cantordiff/scantor.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace cantordiff;
using central::CentralCantor;
using central::VerdictKind;
using scantor::SCantorParams;
using scantor::TopologyClass;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ");
    detail += "runtime " + std::to_string(seconds) + "s exceeds budget";
  }
  if (!ok) ++g_failures;
  std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), seconds, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
}

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

CentralCantor cc(std::vector<Rational> prefix, std::vector<Rational> cycle) {
  return CentralCantor(SequenceSpec(std::move(prefix), std::move(cycle)));
}

IntervalUnion full_interval() {
  return union_normalize({Interval(Rational(-1), Rational(1))});
}

Rational unit_rational(std::mt19937& rng, bool small) {
  std::uniform_int_distribution<int> den_dist(2, 12);
  for (;;) {
    const int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(1, den - 1);
    const Rational r(num_dist(rng), den);
    if (small == (r <= Rational(1, 3))) return r;
  }
}

bool criterion1(std::string& detail) {
  const auto a = cc({}, {rat(1, 2), rat(1, 4)});
  const auto b = cc({}, {rat(1, 4), rat(1, 2)});
  bool ok = expect(central::classify(a, b).kind == VerdictKind::FullInterval,
                   "verdict is not FullInterval", detail);
  ok &= expect(central::thickness(a) == Rational(1, 2), "thickness(a)", detail);
  ok &= expect(central::thickness(b) == Rational(1, 2), "thickness(b)", detail);
  ok &= expect(central::thickness(a) * central::thickness(b) == Rational(1, 4),
               "thickness product", detail);
  ok &= expect(!central::newhouse_test(a, b), "thickness test should fail",
               detail);
  return ok;
}

bool criterion2(std::string& detail) {
  const auto a = cc({rat(1, 4), rat(1, 40), rat(1, 40)}, {});
  const auto b = cc({rat(3, 20), rat(1, 40), rat(10, 11)}, {});
  const auto d = a.piece_lengths(3);
  const auto g = b.piece_lengths(3);
  bool ok = expect(d[1] == Rational(3, 8), "d_1", detail);
  ok &= expect(d[2] == Rational(117, 640), "d_2", detail);
  ok &= expect(d[3] == Rational(4563, 51200), "d_3", detail);
  ok &= expect(g[1] == Rational(17, 40), "g_1", detail);
  ok &= expect(g[2] == Rational(663, 3200), "g_2", detail);
  ok &= expect(g[3] == Rational(663, 70400), "g_3", detail);
  ok &= expect(d[2] / g[2] == Rational(15, 17), "d_2/g_2", detail);
  ok &= expect(b.ratio(3) > d[2] / g[2], "b_3 above the ratio", detail);
  ok &= expect(!central::condition_star_star(a, b, 2),
               "star-star should fail at n=2", detail);
  ok &= expect(central::difference_at_depth(a, b, 3) == full_interval(),
               "depth-3 difference is not [-1,1]", detail);
  return ok;
}

bool criterion3(std::string& detail) {
  std::mt19937 rng(1234);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const int mode = trial % 3;
    std::vector<Rational> prefix, cycle;
    std::uniform_int_distribution<int> len(1, 4);
    const int np = (trial % 2 == 0) ? len(rng) - 1 : len(rng);
    const int nc = len(rng);
    for (int i = 0; i < np; ++i) {
      prefix.push_back(unit_rational(rng, mode == 0));
    }
    for (int i = 0; i < nc; ++i) {
      cycle.push_back(unit_rational(rng, mode != 2));
    }
    if (mode == 1 && prefix.empty()) {
      prefix.push_back(unit_rational(rng, false));
    }

    bool all_small = true;
    bool finitely_many_large = true;
    for (const Rational& t : prefix) all_small &= (t <= Rational(1, 3));
    for (const Rational& t : cycle) {
      all_small &= (t <= Rational(1, 3));
      finitely_many_large &= (t <= Rational(1, 3));
    }

    const auto c = cc(prefix, cycle);
    const auto v = central::classify(c, c);
    const VerdictKind want =
        all_small ? VerdictKind::FullInterval
                  : (finitely_many_large ? VerdictKind::FiniteUnionOfIntervals
                                         : VerdictKind::NotFiniteUnion);
    ok = expect(v.kind == want,
                "spec " + c.seq().to_string() + ": got " +
                    central::to_string(v.kind) + ", want " +
                    central::to_string(want),
                detail);
  }
  return ok;
}

bool criterion4(std::string& detail) {
  bool ok = expect(scantor::classify(SCantorParams(1, 1, 4),
                                     SCantorParams(2, 1, 4)) ==
                       TopologyClass::FullInterval,
                   "(1,1,4)-(2,1,4)", detail);

  const DigitSet l_digits = ds_diff(digit_set_of(SCantorParams(3, 2, 7)),
                                    digit_set_of(SCantorParams(1, 3, 7)));
  ok &= expect(scantor::classify(SCantorParams(3, 2, 7),
                                 SCantorParams(1, 3, 7)) ==
                   TopologyClass::LCantorval,
               "(3,2,7)-(1,3,7) class", detail);
  ok &= expect(l_digits == DigitSet(7, {-6, -5, -4, -3, -2, -1, 0, 1, 2, 5, 6}),
               "(3,2,7)-(1,3,7) digits", detail);

  const DigitSet r_digits = ds_diff(digit_set_of(SCantorParams(1, 3, 7)),
                                    digit_set_of(SCantorParams(3, 2, 7)));
  ok &= expect(scantor::classify(SCantorParams(1, 3, 7),
                                 SCantorParams(3, 2, 7)) ==
                   TopologyClass::RCantorval,
               "(1,3,7)-(3,2,7) class", detail);
  ok &= expect(r_digits == DigitSet(7, {-6, -5, -2, -1, 0, 1, 2, 3, 4, 5, 6}),
               "(1,3,7)-(3,2,7) digits", detail);

  const DigitSet m_digits = ds_diff(digit_set_of(SCantorParams(2, 2, 7)),
                                    digit_set_of(SCantorParams(2, 2, 7)));
  ok &= expect(scantor::classify_self(SCantorParams(2, 2, 7)) ==
                   TopologyClass::MCantorval,
               "(2,2,7) self class", detail);
  ok &= expect(m_digits == DigitSet(7, {-6, -5, -4, -1, 0, 1, 4, 5, 6}),
               "(2,2,7) self digits", detail);

  ok &= expect(scantor::classify_self(SCantorParams(1, 1, 3)) ==
                   TopologyClass::FullInterval,
               "(1,1,3) self", detail);
  ok &= expect(scantor::kraft_threshold(2, 5) == TopologyClass::FullInterval,
               "symmetric l=2, p=5", detail);
  ok &= expect(scantor::kraft_threshold(1, 5) == TopologyClass::CantorSet,
               "symmetric l=1, p=5", detail);
  return ok;
}

bool criterion5(std::string& detail) {
  bool ok = true;
  std::size_t count = 0;
  for (int p = 3; p <= 12 && ok; ++p) {
    std::vector<SCantorParams> params;
    for (int l = 1; l + 1 < p; ++l) {
      for (int r = 1; l + r < p; ++r) params.emplace_back(l, r, p);
    }
    for (const auto& P1 : params) {
      for (const auto& P2 : params) {
        ++count;
        const auto c = scantor::conditions(P1, P2);
        if (!c.consistent()) {
          ok = expect(false, "condition implications violated", detail);
          break;
        }
        // classify throws unless exactly one clause fires
        const TopologyClass cls = scantor::classify(P1, P2);
        if (cls != scantor::mirror(scantor::classify(P2, P1))) {
          ok = expect(false, "mirror duality violated", detail);
          break;
        }
      }
      if (!ok) break;
    }
  }
  if (ok && count != scantor::sweep_row_count(12)) {
    ok = expect(false, "tuple count mismatch", detail);
  }
  return ok;
}

bool criterion6(std::string& detail) {
  const auto sv = oracle::verify_sweep(7, 3);
  bool ok = expect(sv.tuples == scantor::sweep_row_count(7),
                   "tuple count mismatch", detail);
  if (sv.failures != 0) {
    ok = expect(false,
                std::to_string(sv.failures) + " tuples failed; first: " +
                    sv.failed_reports.front().subject + " -- " +
                    sv.failed_reports.front().first_failure(),
                detail);
  }
  return ok;
}

bool criterion7(std::string& detail) {
  bool ok = true;
  for (int p = 2; p <= 6 && ok; ++p) {
    const int inner = 2 * p - 3;  // digits strictly between -(p-1) and p-1
    for (unsigned mask = 0; mask < (1u << inner) && ok; ++mask) {
      std::vector<long long> digits{-(p - 1), p - 1};
      for (int bit = 0; bit < inner; ++bit) {
        if (mask & (1u << bit)) digits.push_back(-(p - 1) + 1 + bit);
      }
      const DigitSet a(p, digits);
      const bool flat = is_interval(a);
      const bool connected = oracle::cover_connected(a, 6);
      ok = expect(flat == connected,
                  "disagreement on " + to_string(a) + ": criterion " +
                      (flat ? "yes" : "no") + ", cover " +
                      (connected ? "connected" : "split"),
                  detail);
    }
  }
  return ok;
}

bool criterion8(std::string& detail) {
  std::mt19937 rng(4321);
  std::uniform_int_distribution<int> den_dist(2, 12);
  std::uniform_int_distribution<std::size_t> pre(0, 2), cyc(1, 3);
  bool ok = true;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    auto random_spec = [&] {
      std::vector<Rational> prefix, cycle;
      const std::size_t np = pre(rng), nc = cyc(rng);
      for (std::size_t i = 0; i < np; ++i) {
        const int den = den_dist(rng);
        prefix.emplace_back(
            std::uniform_int_distribution<int>(1, den - 1)(rng), den);
      }
      for (std::size_t i = 0; i < nc; ++i) {
        const int den = den_dist(rng);
        cycle.emplace_back(
            std::uniform_int_distribution<int>(1, den - 1)(rng), den);
      }
      return SequenceSpec(prefix, cycle);
    };
    const CentralCantor a(random_spec());
    const CentralCantor b(random_spec());
    for (std::size_t n = 0; n <= 6 && ok; ++n) {
      const IntervalUnion lhs = central::difference_at_depth(a, b, n);
      const IntervalUnion rhs = minkowski_diff(central::approximation(a, n),
                                               central::approximation(b, n));
      ok = expect(lhs == rhs,
                  "route mismatch at depth " + std::to_string(n) + " for " +
                      a.seq().to_string() + " vs " + b.seq().to_string(),
                  detail);
    }
  }
  return ok;
}

bool criterion9(std::string& detail) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> den_dist(2, 12);
  auto random_spec = [&] {
    std::vector<Rational> cycle;
    const std::size_t nc =
        std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    for (std::size_t i = 0; i < nc; ++i) {
      const int den = den_dist(rng);
      cycle.emplace_back(std::uniform_int_distribution<int>(1, den - 1)(rng),
                         den);
    }
    return SequenceSpec({}, cycle);
  };

  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const CentralCantor a(random_spec());
    const CentralCantor b(random_spec());
    const auto d = a.piece_lengths(6);
    const auto g = b.piece_lengths(6);

    // removal-step lengths shrink strictly with depth
    for (std::size_t n = 1; n <= 5 && ok; ++n) {
      for (std::size_t k = 0; k < n && ok; ++k) {
        ok = expect(d[n] - d[n + 1] < d[k] - d[k + 1],
                    "piece shrink violated", detail);
      }
    }

    // endpoint equivalences on every signature up to depth 4
    std::vector<central::JSignature> level{{central::JSignature{}}};
    for (std::size_t n = 0; n <= 4 && ok; ++n) {
      std::vector<central::JSignature> next;
      for (const auto& s : level) {
        central::JSignature kids[4];
        Interval j[4] = {Interval(0, 0), Interval(0, 0), Interval(0, 0),
                         Interval(0, 0)};
        for (int t = 0; t < 4; ++t) {
          kids[t] = s;
          kids[t].digits.push_back(static_cast<std::uint8_t>(t));
          j[t] = central::j_interval(a, b, kids[t]);
          next.push_back(kids[t]);
        }
        auto meets = [](const Interval& u, const Interval& v) {
          return std::max(u.lo, v.lo) <= std::min(u.hi, v.hi);
        };
        const Rational an1 = a.ratio(n + 1), bn1 = b.ratio(n + 1);
        ok = expect((g[n] / d[n] >= an1) == (j[2].lo <= j[1].hi), "eq-1",
                    detail) &&
             expect((d[n] / g[n] >= bn1) == (j[1].lo <= j[2].hi), "eq-2",
                    detail) &&
             expect((d[n] / g[n] >= bn1 && g[n] / d[n] >= an1) ==
                        meets(j[1], j[2]),
                    "eq-3", detail) &&
             expect((d[n + 1] / g[n] >= bn1) == meets(j[0], j[1]), "eq-4a",
                    detail) &&
             expect(meets(j[0], j[1]) == meets(j[2], j[3]), "eq-4b", detail) &&
             expect((g[n + 1] / d[n] >= an1) == meets(j[0], j[2]), "eq-5a",
                    detail) &&
             expect(meets(j[0], j[2]) == meets(j[1], j[3]), "eq-5b", detail);
        if (!ok) break;
      }
      level = std::move(next);
      if (level.size() > 256) level.resize(256);  // keep depth-4 sweep bounded
    }

    // one-step stabilization whenever both conditions hold
    for (std::size_t n = 0; n <= 4 && ok; ++n) {
      if (central::condition_star(a, b, n) &&
          central::condition_star_star(a, b, n)) {
        ok = expect(central::difference_at_depth(a, b, n + 1) ==
                        central::difference_at_depth(a, b, n),
                    "stabilization step violated at n=" + std::to_string(n),
                    detail);
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  run_criterion(1, "alternating-cycle pair: full difference without the "
                   "thickness test", 1.0, criterion1);
  run_criterion(2, "three-step pair: exact lengths, star-star failure, full "
                   "depth-3 difference", 1.0, criterion2);
  run_criterion(3, "self-difference law on 200 random periodic sequences",
                5.0, criterion3);
  run_criterion(4, "five-way classification golden cases with exact digit "
                   "sets", 1.0, criterion4);
  run_criterion(5, "exhaustive clause totality, implications and mirror "
                   "duality for p <= 12", 30.0, criterion5);
  run_criterion(6, "certificate crosscheck of every tuple with p <= 7 at "
                   "depth 3", 120.0, criterion6);
  run_criterion(7, "interval criterion versus depth-6 cover connectivity, "
                   "all framed digit sets p <= 6", 60.0, criterion7);
  run_criterion(8, "signature route equals stage-difference route on 50 "
                   "random pairs", 30.0, criterion8);
  run_criterion(9, "shrinkage, endpoint equivalences and stabilization on "
                   "100 random pairs", 30.0, criterion9);

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
