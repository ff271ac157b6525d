#pragma once

#include "cantordiff/central.hpp"
#include "cantordiff/oracle.hpp"
#include "cantordiff/scantor.hpp"

#include <json.hpp>

#include <string>

namespace cantordiff::report {

using json = nlohmann::json;

json to_json(const Rational& x);
json to_json(const Interval& iv);
json to_json(const IntervalUnion& u);
json to_json(const oracle::Certificate& cert);
json to_json(const oracle::CrosscheckReport& rep);
json to_json(const scantor::SConditions& c);

/// Full machine-readable report for the central classifier: verdict,
/// witnesses, the condition table over one aligned cycle, thickness and the
/// thickness-product flag. All reports carry "schema": 1.
json central_classify_report(const central::CentralCantor& a,
                             const central::CentralCantor& b,
                             const central::CentralVerdict& v);

json scantor_classify_report(const scantor::SCantorParams& P1,
                             const scantor::SCantorParams& P2);

json verify_report(const oracle::CrosscheckReport& rep);

json sweep_verify_report(const oracle::SweepVerification& sv, int p_max,
                         int depth);

}  // namespace cantordiff::report
