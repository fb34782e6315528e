#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "zmdeg/cli.hpp"

namespace zmdeg::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zmdeg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Report, JsonValues) {
  const auto res = invoke({"report", "-m", "9", "-n", "4", "-r", "8", "--format", "json"});
  ASSERT_EQ(res.code, kOk) << res.err;
  const auto doc = Json::parse(res.out);
  EXPECT_EQ(doc["params"]["m"], "9");
  EXPECT_EQ(doc["counts"]["subgroups"], "19");
  EXPECT_EQ(doc["counts"]["cyclic_subgroups"], "15");
  EXPECT_EQ(doc["counts"]["f2"], "85");
  EXPECT_EQ(doc["counts"]["cf2"], "36");
  EXPECT_EQ(doc["degrees"]["sd"], "13/19");
  EXPECT_EQ(doc["degrees"]["csd"], "17/25");
}

TEST(Report, JsonRoundTrip) {
  for (const auto& params : valid_triples(60)) {
    const auto res = invoke({"report", "-m", params.m().str(), "-n", params.n().str(), "-r", params.r().str(),
                             "--format", "json"});
    ASSERT_EQ(res.code, kOk);
    const DegreeReport back = report_from_json(Json::parse(res.out));
    const DegreeReport fresh = make_report(back.params);
    ASSERT_EQ(back.params, params);
    ASSERT_EQ(back.f2, fresh.f2);
    ASSERT_EQ(back.cf2, fresh.cf2);
    ASSERT_EQ(back.sd, fresh.sd);
    ASSERT_EQ(back.csd, fresh.csd);
  }
}

TEST(Report, TrivialGroupAllOnes) {
  const auto res = invoke({"report", "-m", "1", "-n", "1", "-r", "1", "--format", "json"});
  ASSERT_EQ(res.code, kOk);
  const auto doc = Json::parse(res.out);
  EXPECT_EQ(doc["degrees"]["sd"], "1/1");
  EXPECT_EQ(doc["degrees"]["csd"], "1/1");
  EXPECT_EQ(doc["counts"]["f2"], "1");
}

TEST(Report, OracleVerdict) {
  const auto res = invoke({"report", "-m", "9", "-n", "4", "-r", "8", "--oracle", "--format", "json"});
  ASSERT_EQ(res.code, kOk);
  const auto doc = Json::parse(res.out);
  EXPECT_EQ(doc["oracle"]["overall"], "MATCH");
  EXPECT_EQ(doc["oracle"]["degrees"]["sd"], "13/19");

  const auto text = invoke({"report", "-m", "3", "-n", "2", "-r", "2", "--oracle"});
  ASSERT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("verdict           MATCH"), std::string::npos);
}

TEST(Report, CsvAndText) {
  const auto csv = invoke({"report", "-m", "3", "-n", "2", "-r", "2", "--format", "csv"});
  ASSERT_EQ(csv.code, kOk);
  EXPECT_EQ(lines(csv.out), (std::vector<std::string>{kCsvHeader, "3,2,2,6,5,17,6,5/6,19/25"}));

  const auto text = invoke({"report", "-m", "9", "-n", "4", "-r", "8"});
  ASSERT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("13/19 (0.684211)"), std::string::npos);
}

TEST(Errors, InvalidTriple) {
  const auto order = invoke({"report", "-m", "9", "-n", "4", "-r", "2"});
  EXPECT_EQ(order.code, kInvalidInput);
  EXPECT_NE(order.err.find("OrderViolation"), std::string::npos);

  const auto even = invoke({"report", "-m", "4", "-n", "1", "-r", "1"});
  EXPECT_EQ(even.code, kInvalidInput);

  EXPECT_EQ(invoke({"report", "-m", "x", "-n", "1", "-r", "1"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"report", "-m", "9"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"report", "-m", "9", "-n", "4", "-r", "8", "--format", "xml"}).code, kInvalidInput);
  EXPECT_EQ(invoke({}).code, kInvalidInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInvalidInput);
}

TEST(Errors, OracleBound) {
  ::setenv("ZMDEG_ORACLE_BOUND", "20", 1);
  EXPECT_EQ(invoke({"oracle-check", "--max-mn", "36"}).code, kBoundExceeded);
  EXPECT_EQ(invoke({"report", "-m", "9", "-n", "4", "-r", "8", "--oracle"}).code, kBoundExceeded);
  EXPECT_EQ(invoke({"report", "-m", "9", "-n", "4", "-r", "8"}).code, kOk);
  ::unsetenv("ZMDEG_ORACLE_BOUND");
  EXPECT_EQ(invoke({"oracle-check", "--max-mn", "2001"}).code, kBoundExceeded);
}

TEST(Sweep, RowsAndDeterminism) {
  const auto a = invoke({"sweep", "--max-mn", "60", "--jobs", "1"});
  const auto b = invoke({"sweep", "--max-mn", "60", "--jobs", "4"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  const auto rows = lines(a.out);
  EXPECT_EQ(rows.front(), kCsvHeader);
  EXPECT_EQ(rows.size(), valid_triples(60).size() + 1);
  EXPECT_NE(std::find(rows.begin(), rows.end(), "9,4,8,19,15,85,36,13/19,17/25"), rows.end());

  const auto json = invoke({"sweep", "--max-mn", "10", "--format", "json"});
  for (const auto& line : lines(json.out)) EXPECT_NO_THROW(report_from_json(Json::parse(line)));
}

TEST(OracleCheck, SmallRanges) {
  for (const char* bound : {"1", "6", "36"}) {
    const auto res = invoke({"oracle-check", "--max-mn", bound});
    EXPECT_EQ(res.code, kOk) << bound;
    EXPECT_NE(res.out.find("PASS"), std::string::npos);
    EXPECT_EQ(res.out.find("MISMATCH"), std::string::npos);
  }
}

TEST(OracleCheck, StrictWeights) {
  EXPECT_EQ(invoke({"oracle-check", "--max-mn", "36", "--strict-weights"}).code, kOk);
  const auto res = invoke({"oracle-check", "--max-mn", "60", "--strict-weights"});
  EXPECT_EQ(res.code, kCheckFailed);
  EXPECT_NE(res.out.find("note ZM(15,4,2)"), std::string::npos);
}

TEST(Asymptote, Rows) {
  const auto res = invoke({"asymptote", "-p", "3", "--alpha-max", "2", "--format", "csv"});
  ASSERT_EQ(res.code, kOk);
  EXPECT_EQ(lines(res.out), (std::vector<std::string>{"alpha,sd,csd,sd_approx,csd_approx",
                                                      "1,5/6,19/25,0.833333,0.760000",
                                                      "2,71/128,1/2,0.554688,0.500000"}));
  EXPECT_EQ(invoke({"asymptote", "-p", "3", "--alpha-max", "8", "--assert-decreasing"}).code, kOk);
  EXPECT_EQ(invoke({"asymptote", "-p", "2"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"asymptote", "-p", "15"}).code, kInvalidInput);
}

TEST(SearchEqual, Results) {
  const auto none = invoke({"search-equal", "--max-mn", "1"});
  ASSERT_EQ(none.code, kOk);
  EXPECT_EQ(lines(none.out), std::vector<std::string>{"m,n,r,sd,csd"});

  const auto upto36 = invoke({"search-equal", "--max-mn", "36"});
  EXPECT_EQ(upto36.out.find("9,4,8,"), std::string::npos);

  // Every listed row really has sd = csd != 1.
  const auto upto150 = invoke({"search-equal", "--max-mn", "150"});
  const auto rows = lines(upto150.out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream row(rows[i]);
    std::string m, n, r, sd_text, csd_text;
    std::getline(row, m, ',');
    std::getline(row, n, ',');
    std::getline(row, r, ',');
    std::getline(row, sd_text, ',');
    std::getline(row, csd_text, ',');
    const auto report = make_report(validate(Natural(m), Natural(n), Natural(r)));
    EXPECT_EQ(report.sd.str(), sd_text);
    EXPECT_EQ(report.sd, report.csd);
    EXPECT_NE(report.sd, ExactRatio(1));
  }
}

TEST(Output, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "zmdeg_cli_test.csv";
  const auto res = invoke({"sweep", "--max-mn", "20", "--out", path.string()});
  ASSERT_EQ(res.code, kOk);
  EXPECT_TRUE(res.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, kCsvHeader);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace zmdeg::cli
