// One line per acceptance criterion. Criteria 1-11 come from the shared check
// list; 12 runs the CLI suite twice and compares the JSON byte for byte.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "extsq/suite/acceptance.hpp"

namespace {

constexpr double kBudgetMs = 60000;

struct Capture {
  std::string out;
  int status = -1;
};

Capture run(const std::string& cmd) {
  Capture c;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return c;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) c.out.append(buf.data(), got);
  c.status = pclose(p);
  return c;
}

bool report(int id, const std::string& name, bool passed, double ms, const std::string& detail) {
  bool in_time = ms < kBudgetMs;
  std::printf("%s criterion %2d %-28s %8.0f ms  %s%s\n", passed && in_time ? "PASS" : "FAIL", id, name.c_str(), ms,
              detail.c_str(), in_time ? "" : " (over the 60 s budget)");
  return passed && in_time;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to extsq>\n";
    return 2;
  }
  std::string cli = argv[1];
  std::uint64_t seed = 42;
  bool all = true;
  int id = 0;
  for (auto& check : extsq::suite::acceptance_checks()) {
    ++id;
    auto t0 = std::chrono::steady_clock::now();
    auto r = extsq::suite::run_checks({check}, seed + static_cast<std::uint64_t>(id), 1).front();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    all = report(id, r.name, r.passed, ms, r.detail) && all;
  }

  auto t0 = std::chrono::steady_clock::now();
  std::string cmd = "'" + cli + "' suite --seed 42 --json";
  auto a = run(cmd), b = run(cmd);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  bool same = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
  std::string detail = same ? std::to_string(a.out.size()) + " bytes identical, exit 0"
                            : "exit " + std::to_string(a.status) + "/" + std::to_string(b.status) +
                                  (a.out == b.out ? ", outputs equal" : ", outputs differ");
  all = report(12, "c12-determinism", same, ms, detail) && all;
  return all ? 0 : 1;
}
