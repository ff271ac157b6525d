// Command-line surface: classify, sweep, verify, render.

#include "cantordiff/central.hpp"
#include "cantordiff/oracle.hpp"
#include "cantordiff/render.hpp"
#include "cantordiff/report.hpp"
#include "cantordiff/scantor.hpp"

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

using namespace cantordiff;
using central::CentralCantor;
using scantor::SCantorParams;

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

void apply_thread_cap() {
#ifdef _OPENMP
  if (const char* env = std::getenv("CANTORVAL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

int emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << output_path << "\n";
    return kExitUsage;
  }
  out << text;
  return 0;
}

CentralCantor parse_central_or_exit(const std::string& text) {
  auto spec = SequenceSpec::parse(text);
  if (!spec) {
    std::cerr << "invalid sequence '" << text
              << "' (expected \"prefix;cycle\" rational lists, e.g. "
                 "\";1/2,1/4\")\n";
    std::exit(kExitUsage);
  }
  return CentralCantor(std::move(*spec));
}

std::string central_text(const report::json& j) {
  std::string out;
  out += "verdict: " + j["verdict"].get<std::string>() + "\n";
  if (j.contains("witness")) {
    out += "witness:";
    for (const auto& part : j["witness"]) {
      out += " [" + part[0].get<std::string>() + "," +
             part[1].get<std::string>() + "]";
    }
    out += "\n";
  }
  if (j.contains("stabilization_depth")) {
    out += "stabilization depth: " +
           std::to_string(j["stabilization_depth"].get<long long>()) + "\n";
  }
  if (j.contains("failing_index")) {
    out += "first star failure: n=" +
           std::to_string(j["failing_index"].get<long long>()) + "\n";
  }
  out += std::string("certified not [-1,1]: ") +
         (j["not_full_interval"].get<bool>() ? "yes" : "no") + "\n";
  out += std::string("certified not a finite union: ") +
         (j["not_finite_union"].get<bool>() ? "yes" : "no") + "\n";
  if (j.contains("explanation")) {
    out += "note: " + j["explanation"].get<std::string>() + "\n";
  }
  out += "thickness a: " + j["thickness_a"].get<std::string>() + "\n";
  out += "thickness b: " + j["thickness_b"].get<std::string>() + "\n";
  if (j.contains("newhouse")) {
    out += std::string("thickness product >= 1: ") +
           (j["newhouse"].get<bool>() ? "yes" : "no") + "\n";
  }
  out += "conditions (n star star-star):\n";
  for (const auto& row : j["conditions"]) {
    out += "  " + std::to_string(row["n"].get<long long>()) +
           (row["star"].get<bool>() ? " yes" : " no") +
           (row["star_star"].get<bool>() ? " yes" : " no") + "\n";
  }
  return out;
}

std::string scantor_text(const report::json& j) {
  std::string out;
  out += "class: " + j["class"].get<std::string>() + "\n";
  const auto& c = j["conditions"];
  out += std::string("S1: ") + (c["S1"].get<bool>() ? "yes" : "no") +
         "  S1*: " + (c["S1_star"].get<bool>() ? "yes" : "no") + "\n";
  out += std::string("S2: ") + (c["S2"].get<bool>() ? "yes" : "no") +
         "  S2*: " + (c["S2_star"].get<bool>() ? "yes" : "no") + "\n";
  out += std::string("S3: ") + (c["S3"].get<bool>() ? "yes" : "no") + "\n";
  auto range_text = [](const report::json& r) {
    if (r["empty"].get<bool>()) return std::string("empty");
    return "<" + std::to_string(r["lo"].get<long long>()) + "," +
           std::to_string(r["hi"].get<long long>()) + ">";
  };
  out += "excluded low range: " + range_text(j["excluded_low"]) + "\n";
  out += "excluded high range: " + range_text(j["excluded_high"]) + "\n";
  out += "difference digits: " + j["difference_digits"].get<std::string>() +
         "\n";
  return out;
}

std::string crosscheck_text(const oracle::CrosscheckReport& rep) {
  std::string out;
  out += "subject: " + rep.subject + "\n";
  out += "verdict: " + rep.verdict + "\n";
  for (const auto& c : rep.checks) {
    out += std::string(c.skipped ? "SKIP" : (c.pass ? "pass" : "FAIL")) +
           "  " + c.name;
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += "\n";
  }
  out += rep.pass() ? "all checks passed\n" : "CHECKS FAILED\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();

  CLI::App app{"exact classification of differences of self-similar sets"};
  app.require_subcommand(1);

  std::string out_path;
  bool as_json = false;
  app.add_option("-o,--output", out_path, "write the report to a file");
  app.add_flag("--json", as_json, "emit a JSON report");

  // central-classify
  auto* cc_cmd = app.add_subcommand(
      "central-classify", "classify the difference of two centered-removal "
                          "sets given as \"prefix;cycle\"");
  std::string a_text, b_text;
  unsigned cc_budget = 64;
  cc_cmd->add_option("a", a_text, "first ratio sequence")->required();
  cc_cmd->add_option("b", b_text, "second ratio sequence")->required();
  cc_cmd->add_option("--budget", cc_budget,
                     "crossover search budget in cycle periods");

  // scantor-classify
  auto* sc_cmd = app.add_subcommand(
      "scantor-classify", "classify the difference of two keep-low/keep-high "
                          "sets");
  int l1 = 0, r1 = 0, l2 = 0, r2 = 0, p = 0;
  sc_cmd->add_option("l1", l1)->required();
  sc_cmd->add_option("r1", r1)->required();
  sc_cmd->add_option("l2", l2)->required();
  sc_cmd->add_option("r2", r2)->required();
  sc_cmd->add_option("p", p)->required();

  // scantor-sweep
  auto* sw_cmd = app.add_subcommand(
      "scantor-sweep", "classify every valid tuple up to a base bound (CSV)");
  int p_max = 7;
  sw_cmd->add_option("--p-max", p_max, "largest base to include")
      ->check(CLI::Range(3, 64));

  // verify
  auto* vf_cmd = app.add_subcommand(
      "verify", "run the certificate crosscheck against a classification");
  auto* vf_central = vf_cmd->add_subcommand("central", "verify a central pair");
  std::string va_text, vb_text;
  int v_depth_central = 6;
  vf_central->add_option("a", va_text)->required();
  vf_central->add_option("b", vb_text)->required();
  vf_central->add_option("--depth", v_depth_central, "check depth")
      ->check(CLI::Range(1, 10));
  auto* vf_scantor = vf_cmd->add_subcommand("scantor", "verify one tuple");
  int vl1 = 0, vr1 = 0, vl2 = 0, vr2 = 0, vp = 0, v_depth_scantor = 3;
  vf_scantor->add_option("l1", vl1)->required();
  vf_scantor->add_option("r1", vr1)->required();
  vf_scantor->add_option("l2", vl2)->required();
  vf_scantor->add_option("r2", vr2)->required();
  vf_scantor->add_option("p", vp)->required();
  vf_scantor->add_option("--depth", v_depth_scantor, "check depth")
      ->check(CLI::Range(2, 8));
  auto* vf_sweep = vf_cmd->add_subcommand("sweep", "verify every tuple");
  int vs_pmax = 7, vs_depth = 3;
  vf_sweep->add_option("--p-max", vs_pmax)->check(CLI::Range(3, 12));
  vf_sweep->add_option("--depth", vs_depth)->check(CLI::Range(2, 8));
  vf_cmd->require_subcommand(1);

  // render
  auto* rd_cmd = app.add_subcommand(
      "render", "draw the depth covers of a digit set");
  std::string set_text, svg_path, csv_path;
  int rd_depth = 5;
  rd_cmd->add_option("set", set_text,
                     "digit-set literal, e.g. \"p=7:{-6,-5,0,5,6}\"")
      ->required();
  rd_cmd->add_option("--depth", rd_depth)->check(CLI::Range(0, 8));
  rd_cmd->add_option("--svg", svg_path, "write an SVG file");
  rd_cmd->add_option("--csv", csv_path, "write a CSV of endpoints");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cc_cmd) {
      const CentralCantor a = parse_central_or_exit(a_text);
      const CentralCantor b = parse_central_or_exit(b_text);
      const auto verdict = central::classify(a, b, cc_budget);
      const auto j = report::central_classify_report(a, b, verdict);
      return emit(as_json ? j.dump(2) + "\n" : central_text(j), out_path);
    }

    if (*sc_cmd) {
      const SCantorParams P1(l1, r1, p);
      const SCantorParams P2(l2, r2, p);
      const auto j = report::scantor_classify_report(P1, P2);
      return emit(as_json ? j.dump(2) + "\n" : scantor_text(j), out_path);
    }

    if (*sw_cmd) {
      return emit(scantor::sweep_csv(scantor::sweep(p_max)), out_path);
    }

    if (*vf_cmd) {
      if (*vf_central) {
        const CentralCantor a = parse_central_or_exit(va_text);
        const CentralCantor b = parse_central_or_exit(vb_text);
        const auto verdict = central::classify(a, b);
        const auto rep = oracle::crosscheck_central(a, b, verdict,
                                                    v_depth_central);
        const int rc = emit(as_json ? report::verify_report(rep).dump(2) + "\n"
                                    : crosscheck_text(rep),
                            out_path);
        if (rc != 0) return rc;
        return rep.pass() ? 0 : kExitVerificationFailure;
      }
      if (*vf_scantor) {
        const auto rep = oracle::crosscheck_scantor(
            SCantorParams(vl1, vr1, vp), SCantorParams(vl2, vr2, vp),
            v_depth_scantor);
        const int rc = emit(as_json ? report::verify_report(rep).dump(2) + "\n"
                                    : crosscheck_text(rep),
                            out_path);
        if (rc != 0) return rc;
        return rep.pass() ? 0 : kExitVerificationFailure;
      }
      const auto sv = oracle::verify_sweep(vs_pmax, vs_depth);
      std::string text = "tuples: " + std::to_string(sv.tuples) +
                         "\nfailures: " + std::to_string(sv.failures) + "\n";
      for (const auto& rep : sv.failed_reports) {
        text += crosscheck_text(rep);
      }
      const int rc =
          emit(as_json
                   ? report::sweep_verify_report(sv, vs_pmax, vs_depth).dump(2) +
                         "\n"
                   : text,
               out_path);
      if (rc != 0) return rc;
      return sv.failures == 0 ? 0 : kExitVerificationFailure;
    }

    if (*rd_cmd) {
      const auto parsed = parse_digitset(set_text);
      if (!parsed) {
        std::cerr << "invalid digit-set literal: " << set_text << "\n";
        return kExitUsage;
      }
      if (!svg_path.empty()) {
        const int rc = emit(render::cover_svg(*parsed, rd_depth), svg_path);
        if (rc != 0) return rc;
      }
      if (!csv_path.empty()) {
        const int rc = emit(render::cover_csv(*parsed, rd_depth), csv_path);
        if (rc != 0) return rc;
      }
      if (svg_path.empty() && csv_path.empty()) {
        return emit(render::cover_csv(*parsed, rd_depth), out_path);
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
