#include "pgc/commands.hpp"

#include <sstream>

#include "gtest/gtest.h"

namespace pgc {
namespace {

class CommandsTest : public ::testing::Test {
 protected:
  const GaloisConnection conn;
};

TEST_F(CommandsTest, CheckWithZeroTrialsRunsNothing) {
  std::ostringstream out;
  EXPECT_EQ(commands::check(out, {.trials = 0}), commands::kOk);
  EXPECT_EQ(out.str(), "no trials requested\n");
}

TEST_F(CommandsTest, CheckPassesOnStandardTable) {
  std::ostringstream out;
  EXPECT_EQ(commands::check(out, {.trials = 100, .seed = 3}), commands::kOk) << out.str();
  EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
}

TEST_F(CommandsTest, CheckReportsCorruptedTable) {
  std::ostringstream out;
  EXPECT_EQ(commands::check(out, {.trials = 10}, true), commands::kPropertyViolation);
  EXPECT_NE(out.str().find("FAIL table: column collapse"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("counterexample:"), std::string::npos);
}

TEST_F(CommandsTest, NormDemo) {
  std::ostringstream out;
  EXPECT_EQ(commands::norm_demo(out, conn), commands::kOk);
  const std::string text = out.str();
  EXPECT_NE(text.find("left polarity: EMPTY"), std::string::npos);
  EXPECT_NE(text.find("traits with no satisfiable value: B G H Q3 PS ST SR PI OT AP TI"), std::string::npos) << text;
  EXPECT_NE(text.find("discrepancy: M holds at value(s) 3 4"), std::string::npos);
  EXPECT_NE(text.find("discrepancy: LE holds at value(s) 7 8"), std::string::npos);
  EXPECT_NE(text.find("discrepancy: TS holds at value(s) 7 8"), std::string::npos);
}

TEST_F(CommandsTest, RightAndLeftDocuments) {
  CattellProfile f = CattellProfile::uniform(TraitValue(5)).with(TraitId::LE, TraitValue(9));
  Json r = commands::right(conn, f, 2);
  EXPECT_EQ(r["cardinality"], "1");
  EXPECT_EQ(r["sample"].size(), 1u);

  Json all = commands::right(conn, PppSet{}, 0);
  EXPECT_EQ(all["cardinality"], "429981696");

  Json l = commands::left(conn, norm_profile(), true);
  EXPECT_EQ(l["cardinality"], "0");
  ASSERT_TRUE(l.contains("explain"));
  EXPECT_EQ(l["explain"].size(), 11u);
  const Json& b = l["explain"]["B"];
  ASSERT_EQ(b.size(), 10u);
  for (const Json& cell : b) {
    EXPECT_FALSE(cell["holds"].get<bool>());
    EXPECT_EQ(cell["failing_members"], Json::array({0}));
  }
  EXPECT_FALSE(commands::left(conn, SzondiProfile::uniform(Signature::zero), false).contains("explain"));

  EXPECT_THROW(commands::left(conn, f, false), InvalidDocument);
  EXPECT_THROW(commands::right(conn, norm_profile(), 0), InvalidDocument);
}

TEST_F(CommandsTest, TableDump) {
  const std::string csv = commands::table_dump();
  EXPECT_EQ(csv.rfind("trait,value,formula\n", 0), 0u);
  EXPECT_NE(csv.find("A,1,(atom h -!!)"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 281);
}

TEST_F(CommandsTest, FindEmptyReportsStLeConflict) {
  auto report = commands::find_empty(conn, 500, 7);
  EXPECT_EQ(report.samples, 500u);
  EXPECT_GT(report.empty, 0u);
  EXPECT_TRUE(report.conflicts.contains({Factor::s, TraitId::ST, TraitId::LE}));
  std::ostringstream out;
  commands::print(out, report);
  EXPECT_NE(out.str().find("empty right images: "), std::string::npos);
  EXPECT_NE(out.str().find("conflicting trait pairs"), std::string::npos);
}

}  // namespace
}  // namespace pgc
