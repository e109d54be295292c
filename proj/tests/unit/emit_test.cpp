#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "wreath/emit.hpp"
#include "wreath/reports.hpp"

namespace wreath {
namespace {

Table sample_table() {
  Table t;
  t.columns = {"name", "count", "value"};
  t.metadata = {{"seed", "42"}};
  t.add_row({Cell::text("plain"), Cell::integer(3LL), Cell::real(0.1)});
  t.add_row({Cell::text("a,b \"q\""), Cell::integer(BigInt("123456789012345678901234567890")), Cell::real(std::numeric_limits<double>::infinity())});
  return t;
}

TEST(Emit, CsvQuotingAndLineEndings) {
  const std::string csv = render_csv(sample_table());
  EXPECT_EQ(csv,
            "name,count,value\n"
            "plain,3,0.1\n"
            "\"a,b \"\"q\"\"\",123456789012345678901234567890,inf\n");
}

TEST(Emit, JsonStructure) {
  const auto doc = nlohmann::json::parse(render_json(sample_table()));
  EXPECT_EQ(doc["metadata"]["seed"], "42");
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["count"], 3);
  EXPECT_DOUBLE_EQ(doc["rows"][0]["value"].get<double>(), 0.1);
  EXPECT_EQ(doc["rows"][1]["count"], "123456789012345678901234567890");
  EXPECT_TRUE(doc["rows"][1]["value"].is_string());
}

TEST(Emit, RowWidthIsChecked) {
  Table t;
  t.columns = {"a", "b"};
  EXPECT_THROW(t.add_row({Cell::text("x")}), std::exception);
}

TEST(Emit, WritesFiles) {
  const std::string path = ::testing::TempDir() + "emit_test.csv";
  emit(sample_table(), Format::Csv, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), render_csv(sample_table()));
  std::remove(path.c_str());
  EXPECT_THROW(emit(sample_table(), Format::Csv, "/nonexistent-dir/x.csv"), std::runtime_error);
}

TEST(Reports, SpectrumReportForZ2) {
  const Table t = spectrum_report(build_group("Z:2"), 2, WalkKind::Independent, Caps{});
  ASSERT_GE(t.columns.size(), 3u);
  EXPECT_EQ(t.columns[0], "value_num");
  EXPECT_EQ(t.rows.front()[0].str(), "1");
  BigInt total = 0;
  for (const auto& row : t.rows) total += BigInt(row[2].str());
  EXPECT_EQ(total, 8);
}

TEST(Reports, CapsAreEnforced) {
  Caps tiny;
  tiny.max_order = 10;
  EXPECT_THROW(oracle_report(build_group("Z:2"), 3, WalkKind::Independent, {1}, tiny), CapExceeded);
}

}  // namespace
}  // namespace wreath
