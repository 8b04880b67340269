#include <gtest/gtest.h>

#include "minext/minext.hpp"

using namespace minext;

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, Passes) {
  const auto rep = run_suite(GetParam());
  EXPECT_TRUE(rep.ok()) << rep.text();
  EXPECT_EQ(rep.passes, rep.instances);
  EXPECT_GT(rep.instances, 0u);
  EXPECT_EQ(rep.summary(), "SUITE " + GetParam() + ": " + std::to_string(rep.instances) + "/" +
                               std::to_string(rep.instances) + " PASS");
}

INSTANTIATE_TEST_SUITE_P(Registry, EverySuite, ::testing::ValuesIn(suite_ids()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Suites, UnknownSuite) {
  try {
    run_suite("nosuch");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_suite);
  }
}

TEST(Suites, ReportIndependentOfJobs) {
  SuiteOptions one, four;
  four.jobs = 4;
  for (const char* id : {"produce", "hom-oracle", "primeext"}) EXPECT_EQ(run_suite(id, one).text(), run_suite(id, four).text());
}

TEST(Suites, MaxOrderSkips) {
  SuiteOptions o;
  o.max_order = 64;
  const auto small = run_suite("idealdescription", o);
  const auto full = run_suite("idealdescription");
  EXPECT_LT(small.instances, full.instances);
  EXPECT_FALSE(small.notes.empty());
  EXPECT_TRUE(small.ok());
}
