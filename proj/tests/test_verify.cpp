#include <gtest/gtest.h>

#include "mixedpf/verify.hpp"

using namespace mixedpf;

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(verify::run_suite("nope", {}), std::invalid_argument);
}

TEST(Verify, EverySuiteRunsSmall) {
  verify::SuiteOptions small;
  small.max_vertices = 2;
  small.max_edges = 3;
  small.cases = 3;
  small.max_m = 2;
  small.k = 1;
  for (const std::string& name : verify::suite_names()) {
    const verify::RunReport report = verify::run_suite(name, small);
    EXPECT_FALSE(report.cases.empty()) << name;
    EXPECT_TRUE(report.ok()) << name;
    EXPECT_TRUE(std::is_sorted(report.cases.begin(), report.cases.end(),
                               [](const auto& a, const auto& b) { return a.id < b.id; }))
        << name;
  }
}

TEST(Verify, ReportsAreByteStableWithoutTiming) {
  verify::SuiteOptions o;
  o.cases = 5;
  o.seed = 3;
  const std::string a = verify::run_suite("gram", o).to_json("verify gram", false);
  const std::string b = verify::run_suite("gram", o).to_json("verify gram", false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("seconds"), std::string::npos);
  EXPECT_NE(verify::run_suite("gram", o).to_json("verify gram", true).find("seconds"), std::string::npos);
}

TEST(Verify, SeedChangesRandomCases) {
  verify::SuiteOptions a;
  a.cases = 4;
  verify::SuiteOptions b = a;
  b.seed = 1;
  EXPECT_NE(verify::run_suite("invariance", a).to_json("x", false), verify::run_suite("invariance", b).to_json("x", false));
}
