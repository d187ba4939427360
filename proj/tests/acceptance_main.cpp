// Acceptance suite runner: one pass/fail line per criterion, nonzero exit
// on any failure. The same checks back `invtopos suite`.

#include <cstdlib>
#include <iostream>
#include <string>

#include "invtopos/suite.hpp"

int main(int argc, char** argv) {
  invtopos::suite::Options options;
  for (int i = 1; i < argc; ++i) {
    std::string const arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--fixtures-only") {
      options.fixtures_only = true;
    } else if (arg == "--random" && i + 1 < argc) {
      options.random_instances = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--seed N] [--random N] [--fixtures-only]\n";
      return 2;
    }
  }

  auto report = invtopos::suite::run(options);
  for (auto const& criterion : report.criteria) {
    std::cout << (criterion.pass ? "[PASS] " : "[FAIL] ") << "criterion "
              << criterion.id << ": " << criterion.name << " ("
              << criterion.checks << " checks)" << std::endl;
    for (auto const& failure : criterion.failures) {
      std::cout << "       failure: " << failure << std::endl;
    }
  }
  std::cout << (report.all_pass() ? "ALL CRITERIA PASSED" : "CRITERIA FAILED")
            << std::endl;
  return report.all_pass() ? 0 : 1;
}
