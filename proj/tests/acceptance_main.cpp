// Runs the acceptance table: one line per criterion on stdout, timings on
// stderr. Exit status 0 iff every line passes.
#include <cstdio>

#include "levelwidth/acceptance.hpp"

int main() {
  const auto print = [](const std::vector<lw::CriterionResult>& lines) {
    for (const lw::CriterionResult& r : lines) {
      std::printf("%s %-4s %s: measured %s, target %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.description.c_str(),
                  r.measured.c_str(), r.target.c_str());
      std::fprintf(stderr, "  [%s took %.2f s]\n", r.id.c_str(), r.seconds);
    }
    std::fflush(stdout);
  };
  const std::vector<lw::CriterionResult> results = lw::run_acceptance(print);
  int failed = 0;
  for (const lw::CriterionResult& r : results) failed += r.pass ? 0 : 1;
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
