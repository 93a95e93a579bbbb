#include <gtest/gtest.h>

#include "cfdim/checks/suites.hpp"

using namespace cfdim;

TEST(Suites, NamesAreRunnable) {
  EXPECT_EQ(checks::suite_names().size(), 6u);
  EXPECT_THROW(checks::run_suite("no-such-suite"), validation_error);
}

TEST(Suites, LemmaSuitePasses) {
  const auto s = checks::run_suite("lemma51");
  EXPECT_EQ(s.suite, "lemma51");
  EXPECT_TRUE(s.passed());
}

TEST(Suites, CoverSuiteIndependentOfWorkers) {
  const auto a = checks::cover_prop31_suite(1), b = checks::cover_prop31_suite(8);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_TRUE(a.checks[i].passed) << a.checks[i].name;
    EXPECT_EQ(a.checks[i].checked, b.checks[i].checked);
    EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
  }
}

TEST(Suites, EmptySuiteDoesNotPass) { EXPECT_FALSE(checks::SuiteResult{}.passed()); }
