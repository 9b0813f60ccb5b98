// One line per acceptance criterion; exits nonzero if any is red.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "veronese/reproduce.hpp"

int main(int argc, char** argv) {
  veronese::AcceptanceOptions options;
  if (const char* t = std::getenv("VERONESE_THREADS")) options.threads = std::max(1, std::atoi(t));

  int failed = 0;
  auto report = [&](const veronese::CriterionResult& r) {
    std::printf("%s  %2d  %-30s %7.3fs (limit %2.0fs)  %s\n", r.passed() ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed()) ++failed;
  };
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) report(veronese::run_criterion(std::stoi(argv[i]), options));
  } else {
    for (int id = 1; id <= veronese::kCriterionCount; ++id) report(veronese::run_criterion(id, options));
  }
  return failed == 0 ? 0 : 1;
}
