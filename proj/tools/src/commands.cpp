#include "lozi_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>

#include "lozi/derivatives.hpp"
#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/io.hpp"
#include "lozi/tent.hpp"
#include "lozi_cli/acceptance.hpp"

namespace lozi::cli {

namespace {

std::string tag(const Params& p) { return "a" + format_double(p.a) + "_b" + format_double(p.b); }

std::vector<double> axis_defaults(const std::vector<Params>& defaults, bool a_axis) {
  std::vector<double> values;
  for (const Params& p : defaults) {
    const double v = a_axis ? p.a : p.b;
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  return values;
}

std::vector<double> a_values_or(const RunConfig& config, std::vector<double> fallback) {
  return config.a.empty() ? fallback : parse_values(config.a);
}

}  // namespace

std::vector<Params> param_pairs(const RunConfig& config, const std::vector<Params>& defaults) {
  if (config.a.empty() && config.b.empty()) return defaults;
  const std::vector<double> as = config.a.empty() ? axis_defaults(defaults, true) : parse_values(config.a);
  const std::vector<double> bs = config.b.empty() ? axis_defaults(defaults, false) : parse_values(config.b);
  std::vector<Params> pairs;
  for (double a : as)
    for (double b : bs) pairs.push_back({a, b});
  return pairs;
}

std::vector<Artifact> pruned_region_artifacts(const RunConfig& config, std::ostream& log) {
  const std::vector<Params> panels = {{2.0, 0.0}, {2.0, 0.1}, {1.95, 0.0}, {1.95, 0.1}, {1.7, 0.5}};
  std::vector<Artifact> out;
  for (const Params& p : param_pairs(config, panels)) {
    const Raster r = pruned_region_raster(p, config.word_len, config.depth);
    out.emplace_back("pruned_" + tag(p) + ".pgm", raster_pgm(r));
    out.emplace_back("pruned_" + tag(p) + ".txt", raster_header(r));
    log << "pruned-region a=" << format_double(p.a) << " b=" << format_double(p.b)
        << " pruned=" << r.count(Verdict::CertifiedPruned) << " unknown=" << r.count(Verdict::Unknown)
        << " admissible=" << r.count(Verdict::CertifiedAdmissibleWindow) << "\n";
  }
  return out;
}

std::vector<Artifact> entropy_artifacts(const RunConfig& config, std::ostream& log) {
  Csv csv({"a", "b", "n", "depth", "lower", "upper", "h_lower", "h_upper"});
  for (const Params& p : param_pairs(config, {{2.1, 0.05}, {1.7, 0.0}})) {
    const EntropyBracket e = entropy_estimate(p, config.n_max, config.depth);
    double h_upper = std::log(2.0);
    for (std::size_t i = 0; i < e.counts.size(); ++i) {
      const double n = static_cast<double>(i + 1);
      const WordCount& c = e.counts[i];
      if (c.upper > 0) h_upper = std::min(h_upper, std::log(static_cast<double>(c.upper)) / n);
      if (c.upper == 0) h_upper = 0.0;
      const double h_lower =
          c.lower == 0 ? 0.0 : std::min(h_upper, std::log(static_cast<double>(c.lower)) / n);
      csv.row({format_double(p.a), format_double(p.b), std::to_string(i + 1), std::to_string(config.depth),
               std::to_string(c.lower), std::to_string(c.upper), format_double(h_lower), format_double(h_upper)});
    }
    log << "entropy a=" << format_double(p.a) << " b=" << format_double(p.b) << " n_max=" << config.n_max
        << " h in [" << format_double(e.h_lower) << ", " << format_double(e.h_upper) << "]\n";
  }
  return {{"entropy.csv", csv.str()}};
}

std::vector<Artifact> derivatives_artifacts(const RunConfig& config, std::ostream& log) {
  constexpr int kTailLen = 20;
  constexpr int kHeadLen = 60;
  constexpr int kSamples = 64;
  Csv csv({"a", "quantity", "eps_minus2", "bound_lo", "bound_hi", "fd_min", "fd_max", "samples", "inside"});
  std::mt19937_64 rng(config.seed);
  for (double a : a_values_or(config, {1.3, 1.5, 1.7, 2.0})) {
    const Symbols head = kneading(a, kHeadLen).symbols;
    struct Row {
      std::string quantity;
      std::string eps;
      DerivBounds bounds;
      double lo = INFINITY, hi = -INFINITY;
      int n = 0;
    };
    std::vector<Row> rows = {{"d(p-q)/da", "", a_derivative_bounds(a)},
                             {"d(p-q)/db", "+", b_derivative_bounds(a, Symbol::Plus)},
                             {"d(p-q)/db", "-", b_derivative_bounds(a, Symbol::Minus)}};
    for (int s = 0; s < kSamples; ++s) {
      const Word w{symbols_from_bits(rng(), kTailLen), head};
      const double fa = fd_derivative(PruningFunction::PMinusQ, w, {a, 0.0}, 1.0, 0.0).value;
      const double fb = fd_derivative(PruningFunction::PMinusQ, w, {a, 0.0}, 0.0, 1.0).value;
      Row& rb = rows[w.at(-2) == Symbol::Plus ? 1 : 2];
      for (auto [row, v] : {std::pair<Row*, double>{&rows[0], fa}, {&rb, fb}}) {
        row->lo = std::min(row->lo, v);
        row->hi = std::max(row->hi, v);
        ++row->n;
      }
    }
    for (const Row& r : rows) {
      const bool inside = r.n == 0 || (r.bounds.contains(r.lo, 1e-3) && r.bounds.contains(r.hi, 1e-3));
      csv.row({format_double(a), r.quantity, r.eps, format_double(r.bounds.lo), format_double(r.bounds.hi),
               r.n ? format_double(r.lo) : "", r.n ? format_double(r.hi) : "", std::to_string(r.n),
               inside ? "yes" : "no"});
    }
    log << "derivatives a=" << format_double(a) << " dq/db(+,-,-,...)=" << format_double(dq_db_at_b0(a)) << "\n";
  }
  return {{"derivatives.csv", csv.str()}};
}

std::vector<Artifact> cones_artifacts(const RunConfig& config, std::ostream& log) {
  Csv csv({"a", "n1", "n2", "status"});
  int ok = 0;
  int degenerate = 0;
  for (double a : a_values_or(config, parse_values("1.2:2:81"))) {
    try {
      const MonotoneCone c = monotone_cone(a);
      csv.row({format_double(a), format_double(c.n1), format_double(c.n2), "ok"});
      ++ok;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateBounds) throw;
      csv.row({format_double(a), "", "", "degenerate"});
      ++degenerate;
    }
  }
  log << "cones ok=" << ok << " degenerate=" << degenerate << "\n";
  return {{"cones.csv", csv.str()}};
}

std::vector<Artifact> zero_scan_artifacts(const RunConfig& config, std::ostream& log) {
  const auto a_range = config.a.empty() ? std::array<double, 2>{0.0, 2.5} : parse_range(config.a);
  const auto b_range = config.b.empty() ? std::array<double, 2>{0.0, 1.0} : parse_range(config.b);
  const auto grid = parse_grid(config.grid);
  const ZeroScan scan = scan_zero_entropy(a_range, b_range, grid, config.arc_budget);
  std::size_t counts[4] = {};
  for (const ZeroEntropyVerdict& v : scan.cells) ++counts[static_cast<int>(v.kind)];
  std::string header;
  header += "a_range=" + format_double(a_range[0]) + ":" + format_double(a_range[1]) + "\n";
  header += "b_range=" + format_double(b_range[0]) + ":" + format_double(b_range[1]) + "\n";
  header += "grid=" + std::to_string(grid[0]) + "x" + std::to_string(grid[1]) + "\n";
  header += "samples=cell right endpoints\n";
  header += "arc_budget=" + format_double(config.arc_budget) + "\n";
  header += "gray=0:Homoclinic,128:Unknown,192:NumericZero,255:AnalyticZero\n";
  for (int k = 0; k < 4; ++k) {
    header += std::string(to_string(static_cast<ZeroEntropyKind>(k))) + "=" + std::to_string(counts[k]) + "\n";
  }
  log << "zero-scan " << grid[0] << "x" << grid[1] << " analytic=" << counts[0] << " numeric=" << counts[1]
      << " homoclinic=" << counts[2] << " unknown=" << counts[3] << "\n";
  return {{"zero_scan.pgm", zero_scan_pgm(scan)},
          {"zero_scan.csv", zero_scan_csv(scan)},
          {"zero_scan.txt", header}};
}

std::vector<Artifact> manifolds_artifacts(const RunConfig& config, std::ostream& log) {
  std::vector<Artifact> out;
  for (const Params& p : param_pairs(config, {{1.0, 0.5}, {1.7, 0.5}})) {
    std::vector<Polyline> lines;
    const FixedData fd = fixed_data(p);
    if (fd.p1 && fd.p1->saddle()) {
      lines.push_back(unstable_manifold(p, UnstableSeed::P1Right, config.arc_budget).polyline);
      lines.push_back(unstable_manifold(p, UnstableSeed::P1Left, config.arc_budget).polyline);
      if (p.b > 0.0) {
        lines.push_back(stable_manifold(p, StableSide::Halfline, config.arc_budget).polyline);
        lines.push_back(stable_manifold(p, StableSide::Grown, config.arc_budget).polyline);
      }
    }
    if (fd.p2 && fd.p2->saddle()) {
      lines.push_back(unstable_manifold(p, UnstableSeed::P2, config.arc_budget).polyline);
    }
    std::size_t vertices = 0;
    for (const Polyline& l : lines) vertices += l.vertices.size();
    log << "manifolds a=" << format_double(p.a) << " b=" << format_double(p.b) << " polylines=" << lines.size()
        << " vertices=" << vertices << "\n";
    out.emplace_back("manifolds_" + tag(p) + ".csv", polylines_csv(lines));
  }
  return out;
}

std::vector<Artifact> verify_artifacts(const RunConfig& config) {
  RunConfig small = config;
  small.a.clear();
  small.b.clear();
  small.word_len = 8;
  small.depth = 30;
  small.n_max = 10;
  small.grid = "25x10";
  std::ostringstream sink;
  std::vector<Artifact> out;
  for (auto* build : {&pruned_region_artifacts, &entropy_artifacts, &derivatives_artifacts, &cones_artifacts,
                      &zero_scan_artifacts, &manifolds_artifacts}) {
    for (Artifact& a : build(small, sink)) out.push_back(std::move(a));
  }
  return out;
}

void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts, const RunConfig& config,
                     bool force) {
  const std::filesystem::path root(dir);
  atomic_write(root / "run_config.txt", serialize(config), force);
  for (const auto& [name, bytes] : artifacts) atomic_write(root / name, bytes, force);
}

int run_command(const RunConfig& config, std::ostream& out) {
  const std::string& cmd = config.command;
  std::vector<Artifact> artifacts;
  if (cmd == "pruned-region") artifacts = pruned_region_artifacts(config, out);
  else if (cmd == "entropy") artifacts = entropy_artifacts(config, out);
  else if (cmd == "derivatives") artifacts = derivatives_artifacts(config, out);
  else if (cmd == "cones") artifacts = cones_artifacts(config, out);
  else if (cmd == "zero-scan") artifacts = zero_scan_artifacts(config, out);
  else if (cmd == "manifolds") artifacts = manifolds_artifacts(config, out);
  else if (cmd == "verify") {
    AcceptanceOptions opts;
    opts.seed = config.seed;
    const std::vector<CriterionResult> results = run_acceptance(opts, &out);
    std::string report;
    bool all = true;
    for (const CriterionResult& r : results) {
      report += format_result(r, false) + "\n";
      all = all && r.pass;
    }
    artifacts = verify_artifacts(config);
    artifacts.emplace_back("verify_report.txt", report);
    write_artifacts(config.out, artifacts, config, config.force);
    out << (all ? "verify: all criteria pass" : "verify: FAILED") << "\n";
    return all ? 0 : 1;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown command '" + cmd + "'");
  }
  write_artifacts(config.out, artifacts, config, config.force);
  out << "wrote " << artifacts.size() + 1 << " files to " << config.out << "\n";
  return 0;
}

}  // namespace lozi::cli
