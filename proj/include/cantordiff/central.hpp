#pragma once

#include "cantordiff/interval.hpp"
#include "cantordiff/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cantordiff::central {

/// Central Cantor set on [0,1]: at step n an open middle piece of relative
/// length a_n is removed from each surviving interval, so the 2^n depth-n
/// pieces share the exact length d_n = prod_{i<=n} (1 - a_i)/2.
class CentralCantor {
 public:
  explicit CentralCantor(SequenceSpec seq) : seq_(std::move(seq)) {}

  const SequenceSpec& seq() const { return seq_; }
  bool has_depth(std::size_t n) const { return n == 0 || seq_.has_term(n); }

  /// a_n, 1-based.
  const Rational& ratio(std::size_t n) const { return seq_.term(n); }

  /// d_n; d_0 = 1.
  Rational piece_length(std::size_t n) const;

  /// d_0 .. d_n as one vector.
  std::vector<Rational> piece_lengths(std::size_t n) const;

 private:
  SequenceSpec seq_;
};

/// Address of one difference interval at depth |digits|: digit s_i over
/// {0,1,2,3} encodes the branch pair (p_i, q_i) of the two construction
/// trees as s_i = 2 p_i - q_i + 1.
struct JSignature {
  std::vector<std::uint8_t> digits;

  static JSignature from_branches(const std::vector<int>& p,
                                  const std::vector<int>& q);
};

/// Depth-n construction stage: exactly 2^n disjoint closed intervals of
/// length d_n, starting at 0 and ending at 1.
IntervalUnion approximation(const CentralCantor& c, std::size_t depth);

/// The difference interval addressed by s, via the four child rules applied
/// from [-1,1]. Its length is d_n + g_n at depth n = |s|.
Interval j_interval(const CentralCantor& a, const CentralCantor& b,
                    const JSignature& s);

/// Union over all 4^n signatures; equals
/// minkowski_diff(approximation(a,n), approximation(b,n)).
/// The enumeration runs in parallel; the result is deterministic.
IntervalUnion difference_at_depth(const CentralCantor& a,
                                  const CentralCantor& b, std::size_t depth);

/// Single-threaded reference enumeration, kept for testing and benchmarks.
IntervalUnion difference_at_depth_serial(const CentralCantor& a,
                                         const CentralCantor& b,
                                         std::size_t depth);

/// inf_n (1 - a_n)/(2 a_n); an exact minimum over prefix and cycle terms
/// (for finite sequences, over the defined terms).
Rational thickness(const CentralCantor& c);

/// Thickness product test: tau(a) * tau(b) >= 1 forces the difference to be
/// all of [-1,1]. Sufficient only; false is not a negative classification.
/// Requires both sequences eventually periodic.
bool newhouse_test(const CentralCantor& a, const CentralCantor& b);

/// Gap-versus-piece conditions at index n >= 0 (terms at n+1 must exist):
/// star:      g_{n+1}/d_n >= a_{n+1}  or  d_{n+1}/g_n >= b_{n+1}
/// star-star: d_n/g_n >= b_{n+1}  and  g_n/d_n >= a_{n+1}
bool condition_star(const CentralCantor& a, const CentralCantor& b,
                    std::size_t n);
bool condition_star_star(const CentralCantor& a, const CentralCantor& b,
                         std::size_t n);

enum class VerdictKind {
  FullInterval,
  FiniteUnionOfIntervals,
  NotFullInterval,
  NotFiniteUnion,
  Inconclusive,
};

const char* to_string(VerdictKind k);

struct CentralVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;

  /// FiniteUnionOfIntervals: the stable union from stabilization_depth on.
  std::optional<IntervalUnion> witness;

  /// Not* kinds: first index n where the star condition fails.
  std::optional<long long> failing_index;

  /// FullInterval / FiniteUnionOfIntervals: depth from which the difference
  /// no longer changes (0 for FullInterval).
  std::optional<long long> stabilization_depth;

  /// Certified side facts; kind reports the strongest statement.
  bool not_full_interval = false;
  bool not_finite_union = false;

  std::string explanation;
};

/// Classifies C(a) - C(b). Decides the star / star-star conditions for all n
/// exactly on eventually periodic sequences: after the prefixes the ratio
/// d_n/g_n moves along each cycle residue class geometrically with a
/// constant factor per cycle, so each condition is eventually constant and
/// crossovers are found by exact comparison. Finite sequences yield only
/// verdicts certified by their defined terms. budget_periods bounds the
/// crossover search (in cycles); exhausting it yields Inconclusive.
CentralVerdict classify(const CentralCantor& a, const CentralCantor& b,
                        unsigned budget_periods = 64);

}  // namespace cantordiff::central
