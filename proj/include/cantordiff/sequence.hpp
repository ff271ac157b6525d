#pragma once

#include "cantordiff/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cantordiff {

/// Eventually periodic sequence of rationals in (0,1): finitely many leading
/// terms followed by an optional repeating cycle. With an empty cycle the
/// sequence is finite and term(n) is defined only up to the prefix length.
/// At least one term must be given.
class SequenceSpec {
 public:
  SequenceSpec(std::vector<Rational> prefix, std::vector<Rational> cycle);

  bool finite() const { return cycle_.empty(); }
  std::size_t prefix_size() const { return prefix_.size(); }
  std::size_t cycle_size() const { return cycle_.size(); }
  const std::vector<Rational>& prefix() const { return prefix_; }
  const std::vector<Rational>& cycle() const { return cycle_; }

  /// 1-based term access.
  bool has_term(std::size_t n) const;
  const Rational& term(std::size_t n) const;  // throws std::out_of_range

  /// Text form "p1,p2,...;c1,c2,..." — either side may be empty, the ';' is
  /// mandatory. Examples: "1/2,1/4;" (finite), ";1/3" (pure cycle).
  static std::optional<SequenceSpec> parse(std::string_view text);
  std::string to_string() const;

 private:
  std::vector<Rational> prefix_;
  std::vector<Rational> cycle_;
};

}  // namespace cantordiff
