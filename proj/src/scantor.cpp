#include "cantordiff/scantor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantordiff::scantor {

SCantorParams::SCantorParams(int l_, int r_, int p_) : l(l_), r(r_), p(p_) {
  if (p <= 2) throw std::invalid_argument("SCantorParams: p must exceed 2");
  if (l < 1 || r < 1) {
    throw std::invalid_argument("SCantorParams: l and r must be positive");
  }
  if (l + r >= p) throw std::invalid_argument("SCantorParams: need l + r < p");
}

bool SConditions::consistent() const {
  if (s1_star && !s1) return false;
  if (s2_star && !s2) return false;
  if (s3 && (s1 || s2)) return false;
  return true;
}

const char* to_string(TopologyClass c) {
  switch (c) {
    case TopologyClass::FullInterval: return "FullInterval";
    case TopologyClass::CantorSet: return "CantorSet";
    case TopologyClass::LCantorval: return "LCantorval";
    case TopologyClass::RCantorval: return "RCantorval";
    case TopologyClass::MCantorval: return "MCantorval";
  }
  return "?";
}

TopologyClass mirror(TopologyClass c) {
  switch (c) {
    case TopologyClass::LCantorval: return TopologyClass::RCantorval;
    case TopologyClass::RCantorval: return TopologyClass::LCantorval;
    default: return c;
  }
}

DigitSet digit_set_of(const SCantorParams& P) {
  std::vector<long long> digits;
  digits.reserve(static_cast<std::size_t>(P.l + P.r));
  for (int d = 0; d <= P.l - 1; ++d) digits.push_back(d);
  for (int d = P.p - P.r; d <= P.p - 1; ++d) digits.push_back(d);
  return DigitSet(P.p, std::move(digits));
}

SConditions conditions(const SCantorParams& P1, const SCantorParams& P2) {
  if (P1.p != P2.p) throw std::invalid_argument("conditions: base mismatch");
  const int p = P1.p;
  const int l1 = P1.l, r1 = P1.r, l2 = P2.l, r2 = P2.r;
  SConditions c{};
  c.s1 = (l1 + l2 + r2 >= p) || (l1 + r1 + r2 >= p);
  c.s2 = (l1 + r1 + l2 >= p) || (r1 + l2 + r2 >= p);
  c.s3 = (l1 + r1 + l2 + r2 <= p);
  c.s1_star = (l1 + l2 + r2 > p) || (l1 + r1 + r2 > p);
  c.s2_star = (l1 + r1 + l2 > p) || (r1 + l2 + r2 > p);
  return c;
}

TopologyClass classify(const SCantorParams& P1, const SCantorParams& P2) {
  const SConditions c = conditions(P1, P2);
  int fired = 0;
  TopologyClass out = TopologyClass::FullInterval;
  if (c.s1 && c.s2) {
    ++fired;
    out = TopologyClass::FullInterval;
  }
  if (c.s3) {
    ++fired;
    out = TopologyClass::CantorSet;
  }
  if (c.s1_star && !c.s2) {
    ++fired;
    out = TopologyClass::LCantorval;
  }
  if (c.s2_star && !c.s1) {
    ++fired;
    out = TopologyClass::RCantorval;
  }
  if (!c.s1_star && !c.s2_star && !c.s3 && !(c.s1 && c.s2)) {
    ++fired;
    out = TopologyClass::MCantorval;
  }
  if (fired != 1) {
    throw std::logic_error("classify: clause dispatch fired " +
                           std::to_string(fired) + " times");
  }
  return out;
}

TopologyClass classify_self(const SCantorParams& P) {
  const int l = P.l, r = P.r, p = P.p;
  if (2 * l + r >= p || l + 2 * r >= p) return TopologyClass::FullInterval;
  if (2 * l + 2 * r <= p) return TopologyClass::CantorSet;
  return TopologyClass::MCantorval;
}

TopologyClass classify_symmetric(int l1, int l2, int p) {
  if (p <= 2 || l1 < 1 || l2 < 1 || 2 * l1 >= p || 2 * l2 >= p) {
    throw std::invalid_argument("classify_symmetric: need 2*l < p, l >= 1");
  }
  if (2 * l1 + l2 >= p || l1 + 2 * l2 >= p) return TopologyClass::FullInterval;
  if (2 * l1 + 2 * l2 <= p) return TopologyClass::CantorSet;
  return TopologyClass::MCantorval;
}

TopologyClass kraft_threshold(int l, int p) {
  if (p <= 2 || l < 1 || 2 * l >= p) {
    throw std::invalid_argument("kraft_threshold: need 2*l < p, l >= 1");
  }
  if (3 * l >= p) return TopologyClass::FullInterval;
  if (4 * l <= p) return TopologyClass::CantorSet;
  return TopologyClass::MCantorval;
}

std::pair<IntRange, IntRange> lr_sets(const SCantorParams& P1,
                                      const SCantorParams& P2) {
  if (P1.p != P2.p) throw std::invalid_argument("lr_sets: base mismatch");
  const long long p = P1.p;
  const long long l1 = P1.l, r1 = P1.r, l2 = P2.l, r2 = P2.r;
  IntRange L{l1 + r2 - p, std::min(-l2, -r1)};
  IntRange R{std::max(l1, r2), p - r1 - l2};
  return {L, R};
}

std::vector<SweepRow> sweep(int p_max) {
  if (p_max <= 2) return {};
  std::vector<SweepRow> rows;
  for (int l1 = 1; l1 <= p_max - 2; ++l1) {
    for (int r1 = 1; l1 + r1 < p_max; ++r1) {
      for (int l2 = 1; l2 <= p_max - 2; ++l2) {
        for (int r2 = 1; l2 + r2 < p_max; ++r2) {
          const int p_min = std::max(l1 + r1, l2 + r2) + 1;
          for (int p = std::max(3, p_min); p <= p_max; ++p) {
            rows.push_back(SweepRow{l1, r1, l2, r2, p,
                                    TopologyClass::FullInterval});
          }
        }
      }
    }
  }
  const long long n = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    row.cls = classify(SCantorParams(row.l1, row.r1, row.p),
                       SCantorParams(row.l2, row.r2, row.p));
  }
  return rows;
}

std::size_t sweep_row_count(int p_max) {
  std::size_t total = 0;
  for (int p = 3; p <= p_max; ++p) {
    // pairs (l, r) with l, r >= 1 and l + r < p
    const std::size_t pairs =
        static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(p - 2) / 2;
    total += pairs * pairs;
  }
  return total;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "l1,r1,l2,r2,p,class\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.l1) + "," + std::to_string(row.r1) + "," +
           std::to_string(row.l2) + "," + std::to_string(row.r2) + "," +
           std::to_string(row.p) + "," + to_string(row.cls) + "\n";
  }
  return out;
}

}  // namespace cantordiff::scantor
