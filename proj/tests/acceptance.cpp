// Runs the full consistency suite and prints one line per criterion.
#include <cstdio>

#include "orbitfold/checksuite.hpp"

int main() {
  int failures = 0;
  for (const auto& r : orbitfold::run_check_suite()) {
    std::printf("[%s] %s — %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
