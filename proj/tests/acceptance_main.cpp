// Acceptance suite: one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qpsurf/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20261019;
  int failed = 0;
  for (const auto& r : qpsurf::run_acceptance(seed)) {
    std::printf("[%s] %d. %s (%.2f s of %.0f s) - %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.budget_seconds, r.detail.c_str());
    failed += !r.passed;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
