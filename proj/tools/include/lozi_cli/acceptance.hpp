#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lozi::cli {

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  int scan_resolution = 100;  ///< per side of the criterion-10 scan
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  ///< deterministic; timings live in `seconds`
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

/// Runs one criterion (1 ... 12). Library errors are caught and reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs every criterion in order, printing each line to `progress` as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream* progress);

/// "PASS  7 entropy brackets: ..." with an optional "(1.2 s)" suffix.
std::string format_result(const CriterionResult& result, bool with_time);

}  // namespace lozi::cli
