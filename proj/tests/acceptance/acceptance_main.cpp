// Runs every acceptance criterion and prints one line per criterion.
// Usage: gemcolor_acceptance [seed] [size-budget]

#include <cstdlib>
#include <iostream>
#include <string>

#include "suite.hpp"

int main(int argc, char** argv) {
  gemcolor::suite::Options options;
  if (argc > 1) options.seed = std::stoull(argv[1]);
  if (argc > 2) options.size_budget = std::stoi(argv[2]);

  const auto result = gemcolor::suite::run(options);
  for (const auto& c : result.criteria) {
    std::cout << gemcolor::suite::summary_line(c) << "\n";
  }
  std::cout << (result.passed() ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
  return result.passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}
