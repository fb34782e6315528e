#pragma once

// Text, CSV and JSON renderings of degree reports. Integers and rationals are
// always written as exact strings; decimals appear only as display columns.

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "zmdeg/degrees.hpp"
#include "zmdeg/oracle.hpp"

namespace zmdeg {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

inline std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

/// Oracle values next to the formula values, with a per-quantity verdict.
struct OracleComparison {
  oracle::OracleCounts counts;
  std::vector<std::pair<std::string, bool>> verdicts;

  bool all_match() const {
    for (const auto& [name, ok] : verdicts) {
      if (!ok) return false;
    }
    return true;
  }
};

inline OracleComparison compare_with_oracle(const DegreeReport& report, const oracle::OracleCounts& counts) {
  return OracleComparison{counts,
                          {{"subgroups", report.subgroup_count == counts.subgroup_count},
                           {"cyclic_subgroups", report.cyclic_subgroup_count == counts.cyclic_subgroup_count},
                           {"f2", report.f2 == counts.f2},
                           {"cf2", report.cf2 == counts.cf2},
                           {"sd", report.sd == counts.sd},
                           {"csd", report.csd == counts.csd}}};
}

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

}  // namespace detail

inline const char* verdict_text(bool ok) { return ok ? "MATCH" : "MISMATCH"; }

inline const std::string kCsvHeader = "m,n,r,subgroups,cyclic_subgroups,f2,cf2,sd,csd";

inline std::string csv_row(const DegreeReport& r) {
  return r.params.m().str() + "," + r.params.n().str() + "," + r.params.r().str() + "," + r.subgroup_count.str() +
         "," + r.cyclic_subgroup_count.str() + "," + r.f2.str() + "," + r.cf2.str() + "," + r.sd.str() + "," +
         r.csd.str();
}

inline Json to_json(const DegreeReport& r, const std::optional<OracleComparison>& oracle = std::nullopt) {
  Json doc;
  doc["params"] = {{"m", r.params.m().str()}, {"n", r.params.n().str()}, {"r", r.params.r().str()}};
  doc["counts"] = {{"subgroups", r.subgroup_count.str()},
                   {"cyclic_subgroups", r.cyclic_subgroup_count.str()},
                   {"f2", r.f2.str()},
                   {"cf2", r.cf2.str()}};
  doc["degrees"] = {{"sd", r.sd.str()}, {"csd", r.csd.str()}};
  doc["provenance"] = "formula";
  if (oracle) {
    const auto& c = oracle->counts;
    Json o;
    o["counts"] = {{"subgroups", c.subgroup_count.str()},
                   {"cyclic_subgroups", c.cyclic_subgroup_count.str()},
                   {"f2", c.f2.str()},
                   {"cf2", c.cf2.str()}};
    o["degrees"] = {{"sd", c.sd.str()}, {"csd", c.csd.str()}};
    Json verdict = Json::object();
    for (const auto& [name, ok] : oracle->verdicts) verdict[name] = verdict_text(ok);
    o["verdict"] = verdict;
    o["overall"] = verdict_text(oracle->all_match());
    doc["oracle"] = o;
  }
  return doc;
}

/// Reads back the fields written by to_json (formula part only).
inline DegreeReport report_from_json(const Json& doc) {
  const auto& p = doc.at("params");
  const auto& c = doc.at("counts");
  const auto& d = doc.at("degrees");
  auto nat = [](const Json& v) { return Natural(v.get<std::string>()); };
  return DegreeReport{validate(nat(p.at("m")), nat(p.at("n")), nat(p.at("r"))),
                      nat(c.at("subgroups")),
                      nat(c.at("cyclic_subgroups")),
                      nat(c.at("f2")),
                      nat(c.at("cf2")),
                      ExactRatio::parse(d.at("sd").get<std::string>()),
                      ExactRatio::parse(d.at("csd").get<std::string>())};
}

inline void write_text(std::ostream& os, const DegreeReport& r, const std::optional<OracleComparison>& oracle = std::nullopt) {
  os << r.params.str() << "  order " << r.params.order().str() << "\n";
  auto line = [&](const std::string& name, const std::string& value, const std::string& truth, std::optional<bool> ok) {
    os << detail::pad(name, 18);
    if (ok) {
      os << detail::pad(value, 24) << "oracle " << truth << "  " << verdict_text(*ok) << "\n";
    } else {
      os << value << "\n";
    }
  };
  auto verdict = [&](std::size_t i) -> std::optional<bool> {
    if (!oracle) return std::nullopt;
    return oracle->verdicts[i].second;
  };
  const oracle::OracleCounts* c = oracle ? &oracle->counts : nullptr;
  line("subgroups", r.subgroup_count.str(), c ? c->subgroup_count.str() : "", verdict(0));
  line("cyclic_subgroups", r.cyclic_subgroup_count.str(), c ? c->cyclic_subgroup_count.str() : "", verdict(1));
  line("f2", r.f2.str(), c ? c->f2.str() : "", verdict(2));
  line("cf2", r.cf2.str(), c ? c->cf2.str() : "", verdict(3));
  line("sd", r.sd.str() + " (" + r.sd.decimal() + ")", c ? c->sd.str() : "", verdict(4));
  line("csd", r.csd.str() + " (" + r.csd.decimal() + ")", c ? c->csd.str() : "", verdict(5));
  if (oracle) os << "verdict           " << verdict_text(oracle->all_match()) << "\n";
}

inline void write_report(std::ostream& os, Format format, const DegreeReport& r,
                         const std::optional<OracleComparison>& oracle = std::nullopt) {
  switch (format) {
    case Format::Json:
      os << to_json(r, oracle).dump(2) << "\n";
      break;
    case Format::Csv:
      os << kCsvHeader;
      if (oracle) os << ",oracle_verdict";
      os << "\n" << csv_row(r);
      if (oracle) os << "," << verdict_text(oracle->all_match());
      os << "\n";
      break;
    case Format::Text:
      write_text(os, r, oracle);
      break;
  }
}

/// A multi-row table: CSV with header, JSON lines, or the text report
/// repeated per row.
inline void write_reports(std::ostream& os, Format format, const std::vector<DegreeReport>& rows) {
  switch (format) {
    case Format::Csv:
      os << kCsvHeader << "\n";
      for (const auto& r : rows) os << csv_row(r) << "\n";
      break;
    case Format::Json:
      for (const auto& r : rows) os << to_json(r).dump() << "\n";
      break;
    case Format::Text:
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) os << "\n";
        write_text(os, rows[i]);
      }
      break;
  }
}

inline void write_asymptote(std::ostream& os, Format format, const std::vector<AsymptoticRow>& rows) {
  switch (format) {
    case Format::Csv:
      os << "alpha,sd,csd,sd_approx,csd_approx\n";
      for (const auto& row : rows) {
        os << row.alpha << "," << row.sd << "," << row.csd << "," << row.sd.decimal() << "," << row.csd.decimal()
           << "\n";
      }
      break;
    case Format::Json:
      for (const auto& row : rows) {
        Json j;
        j["alpha"] = std::to_string(row.alpha);
        j["sd"] = row.sd.str();
        j["csd"] = row.csd.str();
        j["sd_approx"] = row.sd.decimal();
        j["csd_approx"] = row.csd.decimal();
        os << j.dump() << "\n";
      }
      break;
    case Format::Text: {
      std::size_t sd_width = 2, csd_width = 3;
      for (const auto& row : rows) {
        sd_width = std::max(sd_width, row.sd.str().size());
        csd_width = std::max(csd_width, row.csd.str().size());
      }
      using detail::pad;
      os << pad("alpha", 6) << "  " << pad("sd", sd_width) << "  " << pad("csd", csd_width) << "  "
         << pad("sd~", 8) << "  csd~\n";
      for (const auto& row : rows) {
        os << pad(std::to_string(row.alpha), 6) << "  " << pad(row.sd.str(), sd_width) << "  "
           << pad(row.csd.str(), csd_width) << "  " << pad(row.sd.decimal(), 8) << "  " << row.csd.decimal() << "\n";
      }
      break;
    }
  }
}

}  // namespace zmdeg
