#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vdw/cli/cli.hpp"

namespace {

using Json = nlohmann::json;

struct Run {
  int code;
  std::string out, err;
  std::vector<Json> lines() const {
    std::vector<Json> v;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) v.push_back(Json::parse(line));
    return v;
  }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = vdw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("vdw_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Cli, CountSmallLedgerAndConfigEcho) {
  const auto r = run({"count", "--n", "2", "--H", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["format_version"], 1);
  EXPECT_EQ(lines[0]["config"]["n"], 2);
  EXPECT_EQ(lines[0]["config"]["H"], 1);
  EXPECT_EQ(lines[0]["ledger"]["E"], 4);
}

TEST(Cli, CountLadderReportsFit) {
  const auto r = run({"count", "--n", "3", "--H", "2,4,8", "--threads", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_TRUE(lines[3].contains("fit"));
  EXPECT_GT(lines[3]["fit"]["slope"].get<double>(), 1.5);
}

TEST(Cli, IntervalModeReportsBracket) {
  const auto r = run({"count", "--n", "3", "--H", "2", "--mode", "interval"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto e = r.lines()[0]["ledger"]["E"];
  ASSERT_TRUE(e.is_array());
  const auto exact = run({"count", "--n", "3", "--H", "2"}).lines()[0]["ledger"]["E"].get<std::uint64_t>();
  EXPECT_LE(e[0].get<std::uint64_t>(), exact);
  EXPECT_GE(e[1].get<std::uint64_t>(), exact);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"count", "--n", "9", "--H", "10"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "3", "--H", "2", "--mode", "fuzzy"}).code, 1);
  EXPECT_EQ(run({"count", "--n", "3", "--H", "2", "--delta", "1/2"}).code, 1);
  EXPECT_EQ(run({"fourier", "--p", "5", "--n", "3", "--sigma", "1x"}).code, 1);
  EXPECT_EQ(run({"fourier", "--p", "4", "--n", "3", "--sigma", "1"}).code, 1);
  EXPECT_EQ(run({"verify", "nosuch"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"group", "--name", "Q8"}).code, 1);
}

TEST(Cli, GroupReports) {
  auto g = run({"group", "--name", "M11"}).lines()[0]["group"];
  EXPECT_EQ(g["order"], 7920);
  EXPECT_EQ(g["ind"], 4);
  g = run({"group", "--wreath", "m=5,k=1,r=2"}).lines()[0]["group"];
  EXPECT_EQ(g["degree"], 25);
  EXPECT_EQ(g["primitive"], true);
  EXPECT_EQ(g["ind"], 5);
  g = run({"group", "--name", "C7"}).lines()[0]["group"];
  EXPECT_EQ(g["ind"], 6);
  EXPECT_EQ(run({"group", "--wreath", "m=5,k=1"}).code, 1);
}

TEST(Cli, BoundReports) {
  auto b = run({"bound", "--n", "11", "--ind", "4", "--a", "2.5", "--u", "1/110"}).lines()[0]["report"];
  EXPECT_EQ(b["chosenExp"], "8.686");
  b = run({"bound", "--n", "7", "--ind", "6", "--a", "1/6", "--u", "1/42"}).lines()[0]["report"];
  EXPECT_EQ(b["chosenExpExact"], "2");
  b = run({"bound", "--n", "5", "--ind", "1", "--a", "1", "--u", "0"}).lines()[0]["report"];
  EXPECT_EQ(b["chosenExpExact"], "5");
  const auto h = run({"bound", "--n", "22", "--headline"}).lines()[0]["comparison"];
  EXPECT_EQ(h["chosenExact"], "12");
  EXPECT_EQ(run({"bound", "--n", "5", "--ind", "1", "--a", "1/20", "--u", "1/20"}).code, 1);  // zero denominator
}

TEST(Cli, FourierReportsAndTrend) {
  auto r = run({"fourier", "--sigma", "1", "--p", "5", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.lines()[0]["report"]["mainTermError"].get<double>(), 0.0, 1e-12);

  r = run({"fourier", "--p", "3,5,7", "--n", "3", "--sigma", "1^2", "--space", "monic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 4u);
  std::vector<double> maxes;
  for (int i = 0; i < 3; ++i) maxes.push_back(lines[i]["report"]["maxNonzeroScaled"].get<double>());
  // the trend flag restates the three reported maxima
  const bool increasing = maxes[1] > maxes[0] && maxes[2] > maxes[1];
  EXPECT_EQ(lines[3]["trend"]["maxNonzeroScaled"], increasing ? "increasing" : "non-increasing");
}

TEST(Cli, VerifySuite) {
  const auto r = run({"verify", "fmky"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto res = r.lines()[0]["result"];
  EXPECT_EQ(res["passed"], true);
  EXPECT_EQ(res["violations"], 0);
  EXPECT_EQ(res["checked"], 70);
}

TEST(Cli, CheckpointRerunIsUpToDate) {
  const auto dir = fresh_dir("ckpt");
  const auto out = (dir / "ledger.jsonl").string();
  const std::vector<std::string> args = {"--out", out, "count", "--n", "3", "--H", "3", "--checkpoint",
                                         (dir / "ck").string()};
  auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.err.find("up to date"), std::string::npos);
  const auto first = slurp(out);
  const auto stamp = std::filesystem::last_write_time(out);
  r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("up to date"), std::string::npos);
  EXPECT_EQ(slurp(out), first);
  EXPECT_EQ(std::filesystem::last_write_time(out), stamp);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir / "ck")) ++files;
  EXPECT_EQ(files, 7u);
}

TEST(Cli, CsvMirror) {
  const auto dir = fresh_dir("csv");
  const auto csv = (dir / "counts.csv").string();
  const auto r = run({"--csv", csv, "count", "--n", "2", "--H", "1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(slurp(csv));
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].rfind("n,H,mode,", 0), 0u);
  EXPECT_NE(rows[0].find(",E,"), std::string::npos);
  EXPECT_EQ(rows[1].rfind("2,1,exact,", 0), 0u);
}

TEST(Cli, OutputIndependentOfThreads) {
  const auto a = run({"count", "--n", "3", "--H", "6", "--threads", "1"});
  const auto b = run({"count", "--n", "3", "--H", "6", "--threads", "3"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, HeightsReport) {
  const auto r = run({"heights", "--n1", "1", "--n2", "1", "--H", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.lines()[0]["report"]["violations"], 0);
}

}  // namespace
