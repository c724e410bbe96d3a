#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace extsq::suite {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<CheckResult(std::uint64_t seed)> run;
};

// The eleven library-level acceptance checks, named so that sorting by name
// gives their numeric order.
const std::vector<Check>& acceptance_checks();

// Seeds one generator with `seed`, draws a sub-seed per check in name order,
// then runs the checks on up to `threads` workers. Results come back sorted
// by name whatever the completion order. A check that throws is reported as
// failed with the exception text.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, std::uint64_t seed, unsigned threads);

// EXTSQ_THREADS if set to a positive integer, else hardware concurrency
// (at least 1).
unsigned thread_cap();

}  // namespace extsq::suite
