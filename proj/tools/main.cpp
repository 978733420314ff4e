#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lozi/error.hpp"
#include "lozi_cli/commands.hpp"
#include "lozi_cli/config.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lozi::Error(lozi::ErrorKind::Io, "cannot read config " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pruning fronts, entropy and zero-entropy geometry of the Lozi family"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> a, b, grid, out;
  std::optional<int> word_len, depth, n_max;
  std::optional<double> arc_budget;
  std::optional<std::uint64_t> seed;
  bool force = false;

  app.add_option("--config", config_path, "key=value file; flags given on the command line win");
  app.add_option("--a", a, "a values: x, x,y,... or lo:hi:count (zero-scan: lo:hi)");
  app.add_option("--b", b, "b values, same forms as --a");
  app.add_option("--word-len", word_len, "symbols per side of a raster cylinder");
  app.add_option("--depth", depth, "continued-fraction truncation depth");
  app.add_option("--n-max", n_max, "longest block length for entropy counts");
  app.add_option("--arc-budget", arc_budget, "arc length grown per manifold branch");
  app.add_option("--grid", grid, "zero-scan resolution WxH");
  app.add_option("--out", out, "output directory");
  app.add_option("--seed", seed, "seed for sampled quantities");
  app.add_flag("--force", force, "overwrite existing outputs");

  const char* commands[][2] = {
      {"pruned-region", "rasters of the primary pruned region"},
      {"entropy", "admissible block counts and entropy brackets"},
      {"derivatives", "derivative bounds against finite differences"},
      {"cones", "monotone parameter-plane directions"},
      {"zero-scan", "zero-entropy classification over a parameter grid"},
      {"manifolds", "stable and unstable manifold polylines"},
      {"verify", "run the acceptance suite and write reference artifacts"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    lozi::cli::RunConfig config;
    if (!config_path.empty()) lozi::cli::apply_config_text(config, read_file(config_path));
    config.command = app.get_subcommands().front()->get_name();
    if (a) config.a = *a;
    if (b) config.b = *b;
    if (word_len) config.word_len = *word_len;
    if (depth) config.depth = *depth;
    if (n_max) config.n_max = *n_max;
    if (arc_budget) config.arc_budget = *arc_budget;
    if (grid) config.grid = *grid;
    if (out) config.out = *out;
    if (seed) config.seed = *seed;
    if (force) config.force = true;
    return lozi::cli::run_command(config, std::cout);
  } catch (const lozi::Error& e) {
    std::cerr << "lozi: " << e.what() << "\n";
    return e.kind() == lozi::ErrorKind::InvalidArgument ? kExitUsage : kExitError;
  }
}
