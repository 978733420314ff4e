#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "lozi/error.hpp"
#include "lozi/io.hpp"
#include "lozi_cli/commands.hpp"
#include "lozi_cli/config.hpp"

using namespace lozi;
using namespace lozi::cli;

namespace {

std::string find(const std::vector<Artifact>& artifacts, const std::string& name) {
  for (const auto& [n, bytes] : artifacts)
    if (n == name) return bytes;
  FAIL("missing artifact " << name);
  return {};
}

}  // namespace

TEST_CASE("configs round-trip through text") {
  RunConfig c;
  c.command = "entropy";
  c.a = "1.2:2:9";
  c.b = "0.05";
  c.arc_budget = 0.1 + 0.2;
  c.seed = 99;
  c.force = true;
  RunConfig back;
  apply_config_text(back, "# comment\n\n" + serialize(c));
  CHECK(back == c);
  CHECK_THROWS_AS(apply_config_text(back, "colour=blue\n"), Error);
  CHECK_THROWS_AS(apply_config_text(back, "depth=ten\n"), Error);
}

TEST_CASE("value lists, ranges and grids") {
  CHECK(parse_values("1.7") == std::vector<double>{1.7});
  CHECK(parse_values("1.3,1.5") == std::vector<double>{1.3, 1.5});
  const std::vector<double> v = parse_values("1:2:5");
  REQUIRE(v.size() == 5);
  CHECK(v[2] == doctest::Approx(1.5));
  CHECK(v.back() == 2.0);
  CHECK(parse_range("0:2.5") == std::array<double, 2>{0.0, 2.5});
  CHECK(parse_grid("100x40") == std::array<int, 2>{100, 40});
  CHECK_THROWS_AS(parse_range("2:1"), Error);
  CHECK_THROWS_AS(parse_grid("0x3"), Error);
}

TEST_CASE("round-trip number formatting") {
  for (double x : {0.1, 1.0 / 3.0, 2.0, -1e-300, 6.02214076e23}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("pruned-region panels") {
  RunConfig c;
  c.word_len = 6;
  std::ostringstream log;
  const std::vector<Artifact> out = pruned_region_artifacts(c, log);
  CHECK(out.size() == 10);
  CHECK(find(out, "pruned_a2_b0.txt").find("pruned=0\n") != std::string::npos);
  CHECK(find(out, "pruned_a1.7_b0.5.txt").find("pruned=0\n") == std::string::npos);
  const std::string pgm = find(out, "pruned_a2_b0.pgm");
  CHECK(pgm.rfind("P5\n64 64\n255\n", 0) == 0);
  CHECK(pgm.size() == std::string("P5\n64 64\n255\n").size() + 64 * 64);
  CHECK(pruned_region_artifacts(c, log) == out);
}

TEST_CASE("explicit parameter lists form a product") {
  RunConfig c;
  c.a = "1.8,1.9";
  c.b = "0,0.1,0.2";
  CHECK(param_pairs(c, {{2.0, 0.0}}).size() == 6);
  c.b.clear();
  const std::vector<Params> pairs = param_pairs(c, {{2.0, 0.0}, {2.0, 0.1}});
  CHECK(pairs.size() == 4);
}

TEST_CASE("cones table marks the degenerate range") {
  RunConfig c;
  std::ostringstream log;
  const std::string csv = find(cones_artifacts(c, log), "cones.csv");
  CHECK(csv.find("1.2,,,degenerate") != std::string::npos);
  CHECK(csv.find("2,") != std::string::npos);
  CHECK(csv.find(",ok") != std::string::npos);
}

TEST_CASE("derivatives table stays inside the bounds") {
  RunConfig c;
  std::ostringstream log;
  const std::string csv = find(derivatives_artifacts(c, log), "derivatives.csv");
  CHECK(csv.find(",no\n") == std::string::npos);
}

TEST_CASE("outputs are written atomically and never clobbered silently") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("lozi-cli-test-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  atomic_write(dir / "x.txt", "one", false);
  CHECK_THROWS_AS(atomic_write(dir / "x.txt", "two", false), Error);
  atomic_write(dir / "x.txt", "three", true);
  std::ifstream in(dir / "x.txt");
  std::string text;
  std::getline(in, text);
  CHECK(text == "three");
  for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().filename() == "x.txt");
  fs::remove_all(dir);
}

TEST_CASE("verify artifacts are deterministic") {
  RunConfig c;
  CHECK(verify_artifacts(c) == verify_artifacts(c));
}
