// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Optional arguments select criteria by number.
#include <cstdlib>
#include <iostream>
#include <string>

#include "lozi_cli/acceptance.hpp"

int main(int argc, char** argv) {
  lozi::cli::AcceptanceOptions options;
  bool all_pass = true;
  const auto run = [&](int id) {
    const lozi::cli::CriterionResult r = lozi::cli::run_criterion(id, options);
    std::cout << lozi::cli::format_result(r, true) << std::endl;
    all_pass = all_pass && r.pass;
  };
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) run(std::atoi(argv[i]));
  } else {
    for (int id = 1; id <= lozi::cli::kCriterionCount; ++id) run(id);
  }
  std::cout << (all_pass ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
