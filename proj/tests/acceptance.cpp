// One PASS/FAIL line per acceptance criterion; non-zero exit on any failure.

#include "symprod/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool ok = true;
  for (const auto& r : symprod::acceptance::run(only)) {
    std::printf("%s %2d  %-70s checks=%zu  %.2fs\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.checks,
                r.seconds);
    if (!r.detail.empty()) std::printf("         %s\n", r.detail.c_str());
    for (const auto& f : r.failures) std::printf("         failure: %s\n", f.c_str());
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
