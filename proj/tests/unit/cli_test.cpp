#include <gtest/gtest.h>

#include <sstream>

#include "wreath/cli.hpp"

namespace wreath {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--group", "Z:2"}).code, 2);  // --n missing
  EXPECT_EQ(run({"spectrum", "--n", "2", "--walk", "lazy"}).code, 2);
  EXPECT_EQ(run({"distance", "--n", "2", "--k", "5..1"}).code, 2);
}

TEST(Cli, ValidationAndCapFailuresExitWithOne) {
  EXPECT_EQ(run({"spectrum", "--group", "Q:2", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"spectrum", "--group", "file:/nonexistent.json", "--n", "2"}).code, 1);
  const Result capped = run({"oracle", "--group", "Z:2", "--n", "4", "--k", "1", "--max-order", "100"});
  EXPECT_EQ(capped.code, 1);
  EXPECT_NE(capped.err.find("cap"), std::string::npos);
}

TEST(Cli, SpectrumOutput) {
  const Result r = run({"spectrum", "--group", "Z:2", "--n", "2", "--walk", "independent"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("value_num,value_den,multiplicity", 0), 0u);
}

TEST(Cli, DistanceWithOracleCheck) {
  const Result r = run({"distance", "--group", "Z:2", "--n", "3", "--k", "1..5", "--check-oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("= 0"), std::string::npos);
}

TEST(Cli, SimulateIsReproducible) {
  const std::vector<std::string> args{"simulate", "--group", "Z:2", "--n", "2", "--k", "2", "--trials", "500", "--seed", "9"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonFormat) {
  const Result r = run({"threshold", "--group", "Z:2", "--n", "100", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.front(), '{');
}

}  // namespace
}  // namespace wreath
