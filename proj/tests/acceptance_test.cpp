#include <cstdio>

#include <topomodal/selftest.hpp>

// Runs the ten acceptance checks and prints one verdict line for each.
// Exit status 0 only when every criterion passes.
int main() {
  bool all = true;
  for (const auto& r : topomodal::run_acceptance_suite()) {
    all = all && r.passed;
    std::printf("criterion %2d: %s  %s  (%s)\n", r.number,
                r.passed ? "PASS" : "FAIL", r.title.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf(all ? "acceptance: all 10 criteria passed\n"
                  : "acceptance: FAILED\n");
  return all ? 0 : 1;
}
