// Runs the full acceptance grid and prints one line per criterion.
#include <cstdio>
#include <cstdlib>

#include "wtorus/suite.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const auto results = wtorus::run_acceptance_suite(seed);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s %s (%d checks, %.0f ms)\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.checks, r.elapsed_ms);
    if (!r.pass) {
      ++failed;
      if (!r.detail.empty()) std::printf("     %s\n", r.detail.c_str());
    }
  }
  std::printf("%s %zu/%zu criteria\n", failed ? "FAIL" : "PASS",
              results.size() - failed, results.size());
  return failed ? 1 : 0;
}
