#include "cantordiff/report.hpp"

#include <algorithm>
#include <numeric>

namespace cantordiff::report {

json to_json(const Rational& x) { return cantordiff::to_string(x); }

json to_json(const Interval& iv) {
  return json::array({to_json(iv.lo), to_json(iv.hi)});
}

json to_json(const IntervalUnion& u) {
  json parts = json::array();
  for (const Interval& iv : u.parts()) parts.push_back(to_json(iv));
  return parts;
}

json to_json(const oracle::Certificate& cert) {
  json out;
  out["kind"] = oracle::to_string(cert.kind);
  out["depth"] = cert.depth;
  json data;
  if (cert.interval) data["interval"] = to_json(*cert.interval);
  if (cert.point) data["point"] = to_json(*cert.point);
  if (!cert.digit_prefix.empty() || !cert.digit_cycle.empty()) {
    data["digit_prefix"] = cert.digit_prefix;
    data["digit_cycle"] = cert.digit_cycle;
  }
  if (!cert.note.empty()) data["note"] = cert.note;
  out["data"] = data;
  out["witness_prefixes"] = cert.witness_prefixes;
  return out;
}

json to_json(const oracle::CrosscheckReport& rep) {
  json out;
  out["subject"] = rep.subject;
  out["verdict"] = rep.verdict;
  out["pass"] = rep.pass();
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (c.skipped) jc["skipped"] = true;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  out["checks"] = checks;
  json certs = json::array();
  for (const auto& cert : rep.certificates) certs.push_back(to_json(cert));
  out["certificates"] = certs;
  return out;
}

json to_json(const scantor::SConditions& c) {
  json out;
  out["S1"] = c.s1;
  out["S2"] = c.s2;
  out["S3"] = c.s3;
  out["S1_star"] = c.s1_star;
  out["S2_star"] = c.s2_star;
  return out;
}

json central_classify_report(const central::CentralCantor& a,
                             const central::CentralCantor& b,
                             const central::CentralVerdict& v) {
  json out;
  out["schema"] = 1;
  out["command"] = "central-classify";
  out["a"] = a.seq().to_string();
  out["b"] = b.seq().to_string();
  out["verdict"] = central::to_string(v.kind);
  out["not_full_interval"] = v.not_full_interval;
  out["not_finite_union"] = v.not_finite_union;
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (v.failing_index) out["failing_index"] = *v.failing_index;
  if (v.stabilization_depth) out["stabilization_depth"] = *v.stabilization_depth;
  if (!v.explanation.empty()) out["explanation"] = v.explanation;

  // Condition table over the pre-periodic indices plus one aligned cycle
  // (for finite sequences, over every index with defined terms).
  std::size_t table_rows;
  if (a.seq().finite() || b.seq().finite()) {
    table_rows = 0;
    while (a.seq().has_term(table_rows + 1) && b.seq().has_term(table_rows + 1)) {
      ++table_rows;
    }
  } else {
    table_rows = std::max(a.seq().prefix_size(), b.seq().prefix_size()) +
                 std::lcm(a.seq().cycle_size(), b.seq().cycle_size());
  }
  json table = json::array();
  for (std::size_t n = 0; n < table_rows; ++n) {
    json row;
    row["n"] = n;
    row["star"] = central::condition_star(a, b, n);
    row["star_star"] = central::condition_star_star(a, b, n);
    table.push_back(row);
  }
  out["conditions"] = table;

  out["thickness_a"] = to_json(central::thickness(a));
  out["thickness_b"] = to_json(central::thickness(b));
  if (!a.seq().finite() && !b.seq().finite()) {
    out["newhouse"] = central::newhouse_test(a, b);
  }
  return out;
}

json scantor_classify_report(const scantor::SCantorParams& P1,
                             const scantor::SCantorParams& P2) {
  json out;
  out["schema"] = 1;
  out["command"] = "scantor-classify";
  out["params"] = {{"l1", P1.l}, {"r1", P1.r}, {"l2", P2.l},
                   {"r2", P2.r}, {"p", P1.p}};
  out["class"] = scantor::to_string(scantor::classify(P1, P2));
  out["conditions"] = to_json(scantor::conditions(P1, P2));
  const auto [L, R] = scantor::lr_sets(P1, P2);
  auto range_json = [](const scantor::IntRange& r) {
    json jr;
    jr["empty"] = r.empty();
    if (!r.empty()) {
      jr["lo"] = r.lo;
      jr["hi"] = r.hi;
    }
    return jr;
  };
  out["excluded_low"] = range_json(L);
  out["excluded_high"] = range_json(R);
  out["difference_digits"] =
      to_string(ds_diff(digit_set_of(P1), digit_set_of(P2)));
  return out;
}

json verify_report(const oracle::CrosscheckReport& rep) {
  json out = to_json(rep);
  out["schema"] = 1;
  out["command"] = "verify";
  return out;
}

json sweep_verify_report(const oracle::SweepVerification& sv, int p_max,
                         int depth) {
  json out;
  out["schema"] = 1;
  out["command"] = "verify-sweep";
  out["p_max"] = p_max;
  out["depth"] = depth;
  out["tuples"] = sv.tuples;
  out["failures"] = sv.failures;
  json failed = json::array();
  for (const auto& rep : sv.failed_reports) failed.push_back(to_json(rep));
  out["failed_reports"] = failed;
  return out;
}

}  // namespace cantordiff::report
