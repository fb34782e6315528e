#pragma once

// The zmdeg command line: report, sweep, oracle-check, asymptote and
// search-equal. run() takes explicit streams so tests can drive it in-process.
//
// Exit codes: 0 success, 1 check failure, 2 invalid input, 3 resource bound.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "zmdeg/check.hpp"
#include "zmdeg/degrees.hpp"
#include "zmdeg/oracle.hpp"
#include "zmdeg/report_io.hpp"
#include "zmdeg/zm_core.hpp"

namespace zmdeg::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kBoundExceeded = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Natural parse_natural(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return Natural(text);
}

inline Format to_format(const std::string& name) {
  auto f = parse_format(name);
  if (!f) throw UsageError("unknown format '" + name + "' (expected json, csv or text)");
  return *f;
}

inline unsigned default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

struct Options {
  std::string m, n, r;
  std::string p = "3";
  unsigned alpha_max = 8;
  std::size_t max_mn = 0;
  std::string format;
  std::string out_path;
  bool oracle = false;
  bool assert_decreasing = false;
  bool strict_weights = false;
  unsigned jobs = default_jobs();
};

inline int cmd_report(const Options& opt, std::ostream& out, std::ostream& err) {
  const ZmParams params = validate(parse_natural(opt.m, "-m"), parse_natural(opt.n, "-n"), parse_natural(opt.r, "-r"));
  const DegreeReport report = make_report(params);
  std::optional<OracleComparison> comparison;
  if (opt.oracle) {
    const auto table = oracle::build_group(params);
    const auto lattice = oracle::enumerate_subgroups(table);
    comparison = compare_with_oracle(report, oracle::definitional_counts(table, lattice));
  }
  write_report(out, to_format(opt.format.empty() ? "text" : opt.format), report, comparison);
  if (comparison && !comparison->all_match()) {
    err << "oracle mismatch for " << params.str() << "\n";
    return kCheckFailed;
  }
  return kOk;
}

inline int cmd_sweep(const Options& opt, std::ostream& out, std::ostream&) {
  const Format format = to_format(opt.format.empty() ? "csv" : opt.format);
  const auto triples = valid_triples(opt.max_mn);
  const auto rows = parallel_map<std::optional<DegreeReport>>(
      triples.size(), opt.jobs, [&](std::size_t i) { return std::optional<DegreeReport>(make_report(triples[i])); });
  std::vector<DegreeReport> reports;
  reports.reserve(rows.size());
  for (const auto& r : rows) reports.push_back(*r);
  write_reports(out, format, reports);
  return kOk;
}

inline int cmd_oracle_check(const Options& opt, std::ostream& out, std::ostream&) {
  const std::size_t bound = oracle::oracle_bound();
  if (opt.max_mn > bound) {
    throw oracle::BoundExceeded("--max-mn " + std::to_string(opt.max_mn) + " exceeds the oracle bound " +
                                std::to_string(bound) + " (set ZMDEG_ORACLE_BOUND to raise it)");
  }
  const auto triples = valid_triples(opt.max_mn);
  const auto results = parallel_map<std::optional<CheckResult>>(
      triples.size(), opt.jobs, [&](std::size_t i) { return std::optional<CheckResult>(check_against_oracle(triples[i], bound)); });

  std::size_t failed = 0, comparisons = 0, weighted_fractional = 0, weighted_wrong = 0;
  for (const auto& result : results) {
    comparisons += result->comparisons;
    if (!result->ok()) ++failed;
    for (const auto& m : result->mismatches) {
      out << "MISMATCH " << result->params.str() << " " << m.quantity << ": formula " << m.formula << ", oracle "
          << m.oracle << "\n";
    }
    if (!result->weighted_integrality_violations.empty()) ++weighted_fractional;
    if (!result->weighted_mismatches.empty()) ++weighted_wrong;
    for (const auto& what : result->weighted_integrality_violations) {
      out << "note " << result->params.str() << " " << what << ": fractional conjugate-ratio weight\n";
    }
    for (const auto& what : result->weighted_mismatches) {
      out << "note " << result->params.str() << " " << what << ": differs from the definitional count\n";
    }
  }
  out << "weighted local counts: " << weighted_fractional << " triple(s) with fractional weights, " << weighted_wrong
      << " with wrong integral values\n";
  const bool weights_ok = weighted_fractional == 0 && weighted_wrong == 0;
  const bool pass = failed == 0 && (!opt.strict_weights || weights_ok);
  out << (pass ? "PASS" : "FAIL") << ": " << triples.size() << " triple(s), " << comparisons << " comparison(s), "
      << failed << " failing triple(s)\n";
  return pass ? kOk : kCheckFailed;
}

inline int cmd_asymptote(const Options& opt, std::ostream& out, std::ostream& err) {
  const Natural p = parse_natural(opt.p, "-p");
  if (p < 3 || !is_prime(p)) throw UsageError("-p must be an odd prime, got " + p.str());
  const auto rows = asymptotic_sweep(p, opt.alpha_max);
  write_asymptote(out, to_format(opt.format.empty() ? "text" : opt.format), rows);
  if (opt.assert_decreasing) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (!(rows[i].sd < rows[i - 1].sd) || !(rows[i].csd < rows[i - 1].csd)) {
        err << "not strictly decreasing at alpha = " << rows[i].alpha << "\n";
        return kCheckFailed;
      }
    }
  }
  return kOk;
}

inline int cmd_search_equal(const Options& opt, std::ostream& out, std::ostream&) {
  const Format format = to_format(opt.format.empty() ? "csv" : opt.format);
  const auto triples = valid_triples(opt.max_mn);
  const auto reports = parallel_map<std::optional<DegreeReport>>(
      triples.size(), opt.jobs, [&](std::size_t i) { return std::optional<DegreeReport>(make_report(triples[i])); });
  const ExactRatio one(1);
  if (format == Format::Csv) out << "m,n,r,sd,csd\n";
  for (const auto& r : reports) {
    if (!(r->sd == r->csd) || r->sd == one) continue;
    const auto& p = r->params;
    switch (format) {
      case Format::Csv:
        out << p.m() << "," << p.n() << "," << p.r() << "," << r->sd << "," << r->csd << "\n";
        break;
      case Format::Json: {
        Json j;
        j["params"] = {{"m", p.m().str()}, {"n", p.n().str()}, {"r", p.r().str()}};
        j["sd"] = r->sd.str();
        j["csd"] = r->csd.str();
        out << j.dump() << "\n";
        break;
      }
      case Format::Text:
        out << p.str() << "  sd = csd = " << r->sd << "\n";
        break;
    }
  }
  return kOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup commutativity degrees of ZM-groups", "zmdeg"};
  app.require_subcommand(1);
  detail::Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format: json, csv or text");
    cmd->add_option("--out", opt.out_path, "Write output to FILE instead of stdout");
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* report = app.add_subcommand("report", "Closed-form report for one triple");
  report->add_option("-m", opt.m, "Order of a")->required();
  report->add_option("-n", opt.n, "Order of b")->required();
  report->add_option("-r", opt.r, "Exponent in b^-1 a b = a^r")->required();
  report->add_flag("--oracle", opt.oracle, "Also compute definitional values by brute force");
  add_format(report);

  auto* sweep = app.add_subcommand("sweep", "Report every valid triple with mn <= N");
  sweep->add_option("--max-mn", opt.max_mn, "Largest group order")->required();
  add_format(sweep);
  add_jobs(sweep);

  auto* check = app.add_subcommand("oracle-check", "Compare every formula with brute force for mn <= N");
  check->add_option("--max-mn", opt.max_mn, "Largest group order")->required();
  check->add_flag("--strict-weights", opt.strict_weights,
                  "Also fail when the conjugate-ratio weighted local counts are fractional or wrong");
  add_jobs(check);
  check->add_option("--out", opt.out_path, "Write output to FILE instead of stdout");

  auto* asym = app.add_subcommand("asymptote", "sd and csd of ZM(p^alpha, n, r) for prime n");
  asym->add_option("-p", opt.p, "Odd prime")->required();
  asym->add_option("--alpha-max", opt.alpha_max, "Largest exponent")->check(CLI::PositiveNumber);
  asym->add_flag("--assert-decreasing", opt.assert_decreasing, "Fail unless sd and csd strictly decrease");
  add_format(asym);

  auto* search = app.add_subcommand("search-equal", "Triples with sd = csd != 1 for mn <= N");
  search->add_option("--max-mn", opt.max_mn, "Largest group order")->required();
  add_format(search);
  add_jobs(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "zmdeg: " << e.what() << "\n";
    return kInvalidInput;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      err << "zmdeg: cannot open " << opt.out_path << " for writing\n";
      return kInvalidInput;
    }
    sink = &file;
  }

  try {
    if (report->parsed()) return detail::cmd_report(opt, *sink, err);
    if (sweep->parsed()) return detail::cmd_sweep(opt, *sink, err);
    if (check->parsed()) return detail::cmd_oracle_check(opt, *sink, err);
    if (asym->parsed()) return detail::cmd_asymptote(opt, *sink, err);
    if (search->parsed()) return detail::cmd_search_equal(opt, *sink, err);
  } catch (const InvalidParams& e) {
    err << "zmdeg: invalid ZM triple:";
    for (auto v : e.violations()) err << " " << violation_name(v);
    err << "\n";
    return kInvalidInput;
  } catch (const UsageError& e) {
    err << "zmdeg: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const oracle::BoundExceeded& e) {
    err << "zmdeg: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const std::invalid_argument& e) {
    err << "zmdeg: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace zmdeg::cli
