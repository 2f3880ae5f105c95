#include <gtest/gtest.h>

#include "stretchkit/verify.hpp"

using namespace stretchkit;

TEST(Suites, AllNamedSuitesPassSmallRuns) {
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, 5, 3);
    EXPECT_TRUE(r.ok()) << r.to_json().dump();
    EXPECT_EQ(r.passed + r.failed, r.trials);
  }
}

TEST(Suites, JordanGridIsExhaustive) {
  const SuiteReport r = run_suite("jordan", 0, 0);
  EXPECT_EQ(r.trials, 100u);
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Suites, SeedReproducesReport) {
  EXPECT_EQ(run_suite("homomorphism", 4, 99).to_json(), run_suite("homomorphism", 4, 99).to_json());
}

TEST(Suites, UnknownNameThrows) {
  EXPECT_THROW(run_suite("nope", 1, 0), std::invalid_argument);
}
