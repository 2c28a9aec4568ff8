#include "mogp/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mogp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "mogp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

const std::string kExample1 = testing::data_path("example1.json");
const std::string kExample2 = testing::data_path("example2.json");

TEST(CliTest, AnalyzeReportsDegreeOfDifficulty) {
  const Result r = run_args({"analyze", kExample1, "--t", "19", "--weights", "0.1,0.9"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("terms=7 vars=3 DoD=3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("n=3 p=2 m=1"), std::string::npos);

  const Result r2 = run_args({"analyze", kExample2});
  EXPECT_EQ(r2.code, kExitOk);
  EXPECT_NE(r2.out.find("terms=8 vars=4 DoD=3"), std::string::npos) << r2.out;
  EXPECT_NE(r2.out.find("constraint terms: 2 1"), std::string::npos) << r2.out;
}

TEST(CliTest, SolvePrintsDualAndPrimal) {
  const Result r = run_args({"solve", kExample1, "--t", "19", "--weights", "0.1,0.9"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Z = 51.4066"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("x1 = 0.37095"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("w0_5 = 0.58954"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lambda1 = "), std::string::npos);
}

TEST(CliTest, SolveCsv) {
  const Result r = run_args({"solve", kExample1, "--t", "19", "--weights", "0.1,0.9", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "t,w1,w2,x1,x2,x3,f1,f2,Z,gap,converged");
}

TEST(CliTest, BadWeightsExitTwo) {
  const Result r = run_args({"solve", kExample1, "--t", "19", "--weights", "0.6,0.6"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("WeightSumError"), std::string::npos) << r.err;
}

TEST(CliTest, NonPositiveCoefficientExitTwo) {
  const Result r = run_args({"solve", kExample1, "--t", "-1", "--weights", "0.5,0.5"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("NonPositiveCoefficient"), std::string::npos) << r.err;
}

TEST(CliTest, NegativeDoDExitFour) {
  const std::string path = write_temp(
      "mogp_negative_dod.json",
      R"({"variables":["x1","x2"],"objectives":[[{"coeff":{"const":1},"exps":{"x1":1,"x2":1}}]]})");
  const Result r = run_args({"solve", path});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.err.find("NegativeDoD"), std::string::npos) << r.err;
  EXPECT_EQ(run_args({"analyze", path}).code, kExitInfeasible);
}

TEST(CliTest, ParseErrorExitTwo) {
  const std::string path = write_temp("mogp_bad.json", "{ not json");
  const Result r = run_args({"solve", path, "--t", "1"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
  EXPECT_EQ(run_args({"solve"}).code, kExitInput);
  EXPECT_EQ(run_args({"solve", kExample1, "--t", "abc", "--weights", "0.5,0.5"}).code, kExitInput);
}

TEST(CliTest, MissingParameterOrWeights) {
  EXPECT_EQ(run_args({"solve", kExample1, "--weights", "0.5,0.5"}).code, kExitInput);
  EXPECT_EQ(run_args({"solve", kExample1, "--t", "19"}).code, kExitInput);
}

TEST(CliTest, NonConvergenceExitThree) {
  const Result r =
      run_args({"solve", kExample2, "--t", "1", "--weights", "0.5,0.5", "--max-iters", "1"});
  EXPECT_EQ(r.code, kExitNonConverged) << r.err;
}

TEST(CliTest, SweepWithRangeSyntax) {
  const Result r = run_args({"sweep", kExample1, "--t", "19:21:1", "--w1", "0.1:0.5:0.1",
                             "--complete-weights", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 16u);
  EXPECT_NE(rows[1].find("19,0.1,0.9,"), std::string::npos) << rows[1];
  EXPECT_NE(rows[15].find(",78.4681"), std::string::npos) << rows[15];
  EXPECT_NE(rows[8].find("20,0.3,0.7,"), std::string::npos) << rows[8];
}

TEST(CliTest, RangeNeedsExplicitCompletion) {
  EXPECT_EQ(run_args({"sweep", kExample1, "--t", "19", "--w1", "0.1:0.5:0.1"}).code, kExitInput);
}

TEST(CliTest, SweepWritesOutputFile) {
  const auto path = (std::filesystem::temp_directory_path() / "mogp_sweep.csv").string();
  const Result r = run_args({"sweep", kExample2, "--t", "1,2", "--weights", "0.5,0.5", "--format",
                             "csv", "--out", path});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,w1,w2,x1,x2,x3,x4,f1,f2,Z,gap,converged");
}

TEST(CliTest, SweepTableAndPrecision) {
  const Result r = run_args({"sweep", kExample1, "--t", "19", "--weights", "0.1,0.9", "--precision", "12"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("51.4066860"), std::string::npos) << r.out;
}

TEST(CliTest, OracleAgreement) {
  const Result r = run_args({"oracle", kExample1, "--t", "19", "--weights", "0.1,0.9"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("agree"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos) << r.out;
}

TEST(NumberListTest, ListsAndRanges) {
  EXPECT_EQ(parse_number_list("19,20,21"), (std::vector<double>{19, 20, 21}));
  EXPECT_EQ(parse_number_list("0.1:0.5:0.1"), (std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5}));
  EXPECT_EQ(parse_number_list("-1"), (std::vector<double>{-1}));
  EXPECT_THROW(parse_number_list("1:2"), Error);
  EXPECT_THROW(parse_number_list("1,,2"), Error);
}

TEST(ExitCodeTest, Mapping) {
  EXPECT_EQ(exit_code(ErrorKind::WeightSumError), 2);
  EXPECT_EQ(exit_code(ErrorKind::NonPositiveCoefficient), 2);
  EXPECT_EQ(exit_code(ErrorKind::MaxIterations), 3);
  EXPECT_EQ(exit_code(ErrorKind::NegativeDoD), 4);
  EXPECT_EQ(exit_code(ErrorKind::InfeasibleDual), 4);
}

}  // namespace
}  // namespace mogp::cli
