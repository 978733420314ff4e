#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lozi::cli {

/// Everything a command reads. Empty `a` / `b` select the command's defaults.
struct RunConfig {
  std::string command;
  std::string a;  ///< "1.7", "1.3,1.5", "1.2:2:81" (inclusive, count points) or "0:2.5"
  std::string b;
  int word_len = 10;
  int depth = 30;
  int n_max = 16;
  double arc_budget = 40.0;
  std::string grid = "100x100";
  std::string out = "lozi-out";
  std::uint64_t seed = 20240601;
  bool force = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// key=value lines in a fixed key order, full round-trip precision.
std::string serialize(const RunConfig& config);

/// Applies key=value lines onto `config`. Blank lines and '#' comments are
/// skipped; unknown keys and malformed values throw InvalidArgument.
void apply_config_text(RunConfig& config, std::string_view text);

/// Applies one setting by key, as a config line or a command-line flag would.
void set_value(RunConfig& config, std::string_view key, std::string_view value);

/// "x", "x,y,z" or "lo:hi:count" (count evenly spaced points, ends included).
std::vector<double> parse_values(std::string_view text);

/// "lo:hi" with lo < hi.
std::array<double, 2> parse_range(std::string_view text);

/// "WxH" with positive sides.
std::array<int, 2> parse_grid(std::string_view text);

}  // namespace lozi::cli
