#pragma once

#include "cantordiff/central.hpp"
#include "cantordiff/digitset.hpp"
#include "cantordiff/interval.hpp"
#include "cantordiff/scantor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cantordiff::oracle {

/// Depth-n reachable prefix sums: sorted integers k with k/p^n realizable as
/// a length-n partial sum over the digit set. Depth 0 holds just {0}; each
/// deeper level is { p*k + d }.
struct PrefixSet {
  int base = 0;
  int depth = 0;
  std::vector<long long> values;

  bool contains(long long k) const;
};

PrefixSet prefixes(const DigitSet& d, int depth);

/// Outer approximation at depth n: around every reachable prefix k/p^n the
/// cell [k/p^n + min/((p-1)p^n), k/p^n + max/((p-1)p^n)] of all possible
/// tails, merged. Contains the represented set at every depth and shrinks
/// with n.
struct Cover {
  int depth = 0;
  IntervalUnion parts;
};

Cover cover(const DigitSet& d, int depth);

/// Connectivity of the depth-n cover, decided on integers only.
bool cover_connected(const DigitSet& d, int depth);

enum class CertKind { IntervalInside, GapCertified, MemberYes, MemberNo };

const char* to_string(CertKind k);

/// Replayable evidence: the data plus the witness needed to reconfirm it by
/// rerunning the prefix dynamic program or the residual automaton.
struct Certificate {
  CertKind kind;
  int depth = 0;
  std::optional<Interval> interval;          // IntervalInside / GapCertified
  std::optional<Rational> point;             // Member*
  std::vector<long long> witness_prefixes;   // cell corners / gap flanks
  std::vector<long long> digit_prefix;       // MemberYes expansion lead-in
  std::vector<long long> digit_cycle;        // MemberYes expansion period
  std::string note;
};

/// Exact membership of a rational in the represented set, via the residual
/// automaton t -> p*t - d restricted to the hull window. Denominators keep
/// dividing the input's, so the reachable state space is finite and the
/// answer is exact: yes iff an infinite digit path exists. Throws when the
/// state budget is exceeded — never returns a wrong answer.
Certificate member(const DigitSet& d, const Rational& x);

/// True iff x lies in a width-p^{-n} cell whose both corners are depth-n
/// prefix sums. Requires digits inside <-p+1, p-1> with -p+1, 0, p-1
/// present, and x in [-1, 1].
bool bi_obtainable(const DigitSet& d, const Rational& x, int depth);

struct CertifyOutcome {
  enum class Status {
    Certified,    // interval proven inside the set
    Failed,       // some cell not certifiable at this depth
    Unavailable,  // digit propagation precondition fails: no verdict
  };

  Status status = Status::Failed;
  std::string reason;
  std::optional<Certificate> certificate;

  bool certified() const { return status == Status::Certified; }
};

/// Attempts to prove iv is contained in the represented set. Sound routes,
/// tried in order:
///  - whole-hull self-similarity: if the p scaled-and-shifted copies of
///    [-1,1] cover [-1,1], the set equals [-1,1] and everything inside is
///    certified;
///  - per cell [k/p^n, (k+1)/p^n]: both corners reachable (interior points
///    stay corner-trapped at all deeper levels when every digit k of
///    <0,p-1> appears as k or k-p, which pins them in the closed set), or
///    one corner reachable with a complete one-sided tail alphabet
///    (<-p+1,0> or <0,p-1> fully present) filling the cell from that corner.
CertifyOutcome certify_interval(const DigitSet& d, const Interval& iv,
                                int depth);

/// Every gap of the depth-n cover, each one a certified gap of the
/// represented set (the cover contains the set, and the flanking cell edges
/// are realized by constant extreme tails).
std::vector<Certificate> certify_gap(const DigitSet& d, int depth);

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

struct CrosscheckReport {
  std::string subject;
  std::string verdict;
  std::vector<CheckResult> checks;
  std::vector<Certificate> certificates;

  bool pass() const;
  std::string first_failure() const;
};

/// Certificate-based validation of the five-way classification at finite
/// depth: full covers plus an inside certificate for FullInterval, certified
/// gaps and no interval certificates for CantorSet, gap-adjacent certified
/// intervals on the matching side and strict gap-count growth in the
/// flanking windows for the Cantorval classes.
CrosscheckReport crosscheck_scantor(const scantor::SCantorParams& P1,
                                    const scantor::SCantorParams& P2,
                                    int depth);

/// Validation of a central verdict against the exact depth-wise difference
/// unions: equality with [-1,1] for FullInterval, stabilization onto the
/// witness, or the predicted hole next to -1 for the negative verdicts.
CrosscheckReport crosscheck_central(const central::CentralCantor& a,
                                    const central::CentralCantor& b,
                                    const central::CentralVerdict& v,
                                    int depth);

struct SweepVerification {
  std::size_t tuples = 0;
  std::size_t failures = 0;
  std::vector<CrosscheckReport> failed_reports;
};

/// crosscheck_scantor over every valid tuple with p <= p_max, in parallel,
/// collecting failing reports in lexicographic tuple order.
SweepVerification verify_sweep(int p_max, int depth);

}  // namespace cantordiff::oracle
