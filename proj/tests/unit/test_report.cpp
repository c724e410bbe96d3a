#include <gtest/gtest.h>

#include <stdexcept>

#include "extsq/suite/report.hpp"

using namespace extsq::suite;

namespace {

std::vector<Check> toy_checks() {
  return {
      {"b", [](std::uint64_t s) { return CheckResult{"", true, std::to_string(s)}; }},
      {"a", [](std::uint64_t s) { return CheckResult{"", true, std::to_string(s)}; }},
      {"c", [](std::uint64_t) -> CheckResult { throw std::runtime_error("boom"); }},
  };
}

}  // namespace

TEST(RunChecks, SortedAndSeededIndependentlyOfThreads) {
  auto one = run_checks(toy_checks(), 7, 1);
  auto many = run_checks(toy_checks(), 7, 3);
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0].name, "a");
  EXPECT_EQ(one[1].name, "b");
  EXPECT_EQ(one[2].name, "c");
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(one[i].name, many[i].name);
    EXPECT_EQ(one[i].detail, many[i].detail);
    EXPECT_EQ(one[i].passed, many[i].passed);
  }
  EXPECT_NE(one[0].detail, one[1].detail);
  EXPECT_NE(run_checks(toy_checks(), 8, 1)[0].detail, one[0].detail);
  EXPECT_FALSE(one[2].passed);
  EXPECT_EQ(one[2].detail, "exception: boom");
}

TEST(RunReport, JsonIsSortedAndTimingOptional) {
  RunReport r;
  r.command = "x";
  r.seed = 42;
  r.add("z", true);
  r.add("m", false, "bad");
  auto j = r.to_json();
  EXPECT_EQ(j["checks"][0]["name"], "m");
  EXPECT_EQ(j["checks"][0]["status"], "fail");
  EXPECT_EQ(j["checks"][1]["status"], "pass");
  EXPECT_FALSE(j.contains("wall_time_ms"));
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_FALSE(r.passed());
  r.wall_time_ms = 5;
  EXPECT_EQ(r.to_json()["wall_time_ms"], 5);
  EXPECT_EQ(r.text().substr(0, 16), "x (seed 42)\nFAIL");
}

TEST(RunReport, EmptyPasses) {
  RunReport r;
  EXPECT_TRUE(r.passed());
}

TEST(ThreadCap, ReadsEnvironment) {
  setenv("EXTSQ_THREADS", "3", 1);
  EXPECT_EQ(thread_cap(), 3u);
  setenv("EXTSQ_THREADS", "zero", 1);
  EXPECT_GE(thread_cap(), 1u);
  unsetenv("EXTSQ_THREADS");
}

TEST(AcceptanceChecks, NamesAreOrdered) {
  auto& c = acceptance_checks();
  ASSERT_EQ(c.size(), 11u);
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_LT(c[i - 1].name, c[i].name);
}
