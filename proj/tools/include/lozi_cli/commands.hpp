#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lozi/pruning.hpp"
#include "lozi_cli/config.hpp"

namespace lozi::cli {

/// A named output file and its bytes.
using Artifact = std::pair<std::string, std::string>;

/// (a, b) pairs for a command: the cartesian product of the configured value
/// lists, or `defaults` when neither is set. A missing list reuses the other
/// axis' default values.
std::vector<Params> param_pairs(const RunConfig& config, const std::vector<Params>& defaults);

// Each builder computes the command's artifacts without touching the disk.
std::vector<Artifact> pruned_region_artifacts(const RunConfig& config, std::ostream& log);
std::vector<Artifact> entropy_artifacts(const RunConfig& config, std::ostream& log);
std::vector<Artifact> derivatives_artifacts(const RunConfig& config, std::ostream& log);
std::vector<Artifact> cones_artifacts(const RunConfig& config, std::ostream& log);
std::vector<Artifact> zero_scan_artifacts(const RunConfig& config, std::ostream& log);
std::vector<Artifact> manifolds_artifacts(const RunConfig& config, std::ostream& log);

/// The fixed, reduced-size artifact set written by `verify`.
std::vector<Artifact> verify_artifacts(const RunConfig& config);

/// Writes artifacts under `dir` (atomic, honouring `force`) plus run_config.txt.
void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts,
                     const RunConfig& config, bool force);

/// Runs config.command. Returns the process exit code; library errors propagate.
int run_command(const RunConfig& config, std::ostream& out);

}  // namespace lozi::cli
