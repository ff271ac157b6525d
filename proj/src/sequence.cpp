#include "cantordiff/sequence.hpp"

#include <stdexcept>

namespace cantordiff {

namespace {

void check_unit_interval(const std::vector<Rational>& terms) {
  for (const Rational& t : terms) {
    if (!(t > 0 && t < 1)) {
      throw std::invalid_argument("SequenceSpec: term " + to_string(t) +
                                  " not in (0,1)");
    }
  }
}

std::optional<std::vector<Rational>> parse_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = (comma == std::string_view::npos)
                                ? text.substr(start)
                                : text.substr(start, comma - start);
    auto value = parse_rational(item);
    if (!value) return std::nullopt;
    out.push_back(*value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

SequenceSpec::SequenceSpec(std::vector<Rational> prefix,
                           std::vector<Rational> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (prefix_.empty() && cycle_.empty()) {
    throw std::invalid_argument("SequenceSpec: no terms");
  }
  check_unit_interval(prefix_);
  check_unit_interval(cycle_);
}

bool SequenceSpec::has_term(std::size_t n) const {
  if (n == 0) return false;
  return !cycle_.empty() || n <= prefix_.size();
}

const Rational& SequenceSpec::term(std::size_t n) const {
  if (n == 0) throw std::out_of_range("SequenceSpec::term: index is 1-based");
  if (n <= prefix_.size()) return prefix_[n - 1];
  if (cycle_.empty()) {
    throw std::out_of_range("SequenceSpec::term: index " + std::to_string(n) +
                            " beyond finite sequence of length " +
                            std::to_string(prefix_.size()));
  }
  return cycle_[(n - prefix_.size() - 1) % cycle_.size()];
}

std::optional<SequenceSpec> SequenceSpec::parse(std::string_view text) {
  const std::size_t sep = text.find(';');
  if (sep == std::string_view::npos) return std::nullopt;
  if (text.find(';', sep + 1) != std::string_view::npos) return std::nullopt;
  auto prefix = parse_list(text.substr(0, sep));
  auto cycle = parse_list(text.substr(sep + 1));
  if (!prefix || !cycle) return std::nullopt;
  if (prefix->empty() && cycle->empty()) return std::nullopt;
  for (const auto& list : {*prefix, *cycle}) {
    for (const Rational& t : list) {
      if (!(t > 0 && t < 1)) return std::nullopt;
    }
  }
  return SequenceSpec(std::move(*prefix), std::move(*cycle));
}

std::string SequenceSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) out += ",";
    out += cantordiff::to_string(prefix_[i]);
  }
  out += ";";
  for (std::size_t i = 0; i < cycle_.size(); ++i) {
    if (i) out += ",";
    out += cantordiff::to_string(cycle_[i]);
  }
  return out;
}

}  // namespace cantordiff
