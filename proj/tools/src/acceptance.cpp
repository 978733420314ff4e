#include "lozi_cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "lozi/derivatives.hpp"
#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/io.hpp"
#include "lozi/pruning.hpp"
#include "lozi/tent.hpp"
#include "lozi_cli/commands.hpp"

namespace lozi::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

Symbols special_head(std::size_t n) {
  Symbols h(n, Symbol::Minus);
  h[0] = Symbol::Plus;
  return h;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!ok) {
      pass = false;
      detail += " [FAIL]";
    }
  }
};

Outcome closed_form_q_check(const AcceptanceOptions&) {
  Outcome o;
  constexpr int kSide = 50;
  constexpr int kDepth = 40;
  const Word w{{}, special_head(kDepth + 1)};
  const auto t0 = Clock::now();
  int bad = 0;
  double worst_ratio = 0.0;
  double worst_err = 0.0;
  for (int j = 0; j < kSide; ++j) {
    const double b = -0.9 + 1.8 * j / (kSide - 1);
    for (int i = 0; i < kSide; ++i) {
      const Params p{1.0 + std::abs(b) + 0.05 + 1.95 * i / (kSide - 1), b};
      const BoundedValue q = eval_q(w, kDepth, p);
      const double diff = std::abs(q.value - closed_form_q(p));
      if (diff > q.err) ++bad;
      worst_err = std::max(worst_err, q.err);
      if (q.err > 0.0) worst_ratio = std::max(worst_ratio, diff / q.err);
    }
  }
  const double t = seconds_since(t0);
  o.require(bad == 0, "grid 50x50 depth 40: " + std::to_string(bad) + " points outside err, max |diff|/err " +
                          num(worst_ratio) + ", max err " + num(worst_err));
  o.require(t < 10.0, "runtime under 10 s");
  return o;
}

Outcome q_maximum_check(const AcceptanceOptions& opt) {
  Outcome o;
  constexpr int kDepth = 40;
  const Params p{2.0, 0.0};
  const Symbols special = special_head(kDepth + 1);
  const double q_special = eval_q(Word{{}, special}, kDepth, p).value;
  o.require(std::abs(q_special - 1.0) <= 1e-10, "q(+,-,-,...) = 1 within 1e-10 (|q-1| = " +
                                                    num(std::abs(q_special - 1.0)) + ")");
  std::mt19937_64 rng(opt.seed);
  int tested = 0;
  int bad = 0;
  double max_q = -INFINITY;
  while (tested < 500) {
    Symbols head = symbols_from_bits(rng(), 41);
    if (head == special) continue;
    ++tested;
    const double q = eval_q(Word{{}, head}, kDepth, p).value;
    max_q = std::max(max_q, q);
    if (!(q < 1.0)) ++bad;
  }
  o.require(bad == 0, "500 random heads below 1 (max " + num(max_q) + ")");
  return o;
}

Outcome d20_empty_check(const AcceptanceOptions&) {
  Outcome o;
  const auto t0 = Clock::now();
  const Raster r = pruned_region_raster({2.0, 0.0}, 10, 30);
  const double t = seconds_since(t0);
  o.require(r.count(Verdict::CertifiedPruned) == 0,
            "word_len 10 at (2,0): " + std::to_string(r.count(Verdict::CertifiedPruned)) + " pruned of " +
                std::to_string(r.cells.size()));
  o.require(t < 120.0, "runtime under 2 min");
  return o;
}

Outcome derivative_anchor_check(const AcceptanceOptions& opt) {
  Outcome o;
  std::mt19937_64 rng(opt.seed);
  double worst_dp = 0.0;
  for (int k = 0; k < 32; ++k) {
    const Word w{symbols_from_bits(rng(), 20), special_head(40)};
    const double fd = fd_derivative(PruningFunction::P, w, {2.0, 0.0}, 0.0, 1.0).value;
    worst_dp = std::max(worst_dp, std::abs(fd - 0.5 * value(w.at(-2))));
  }
  o.require(worst_dp <= 1e-4, "dp/db FD at (2,0) = eps_{-2}/2 (max dev " + num(worst_dp) + ")");
  const double dq = fd_derivative(PruningFunction::Q, Word{{}, special_head(60)}, {2.0, 0.0}, 0.0, 1.0).value;
  o.require(std::abs(dq) <= 1e-4, "dq/db FD at a=2 = 0 (" + num(dq) + ")");
  const double closed = dq_db_at_b0(1.5);
  o.require(std::abs(closed + 8.0 / 9.0) <= 1e-10, "dq_db_at_b0(1.5) = -8/9 (" + num(closed) + ")");
  const double h = 1e-6;
  const double oracle = (closed_form_q({1.5, h}) - closed_form_q({1.5, -h})) / (2.0 * h);
  o.require(std::abs(oracle - closed) <= 1e-6, "FD of the q closed form agrees (" + num(oracle) + ")");
  return o;
}

Outcome bound_lemma_check(const AcceptanceOptions&) {
  Outcome o;
  constexpr int kTail = 14;
  for (double a : {1.3, 1.5, 1.7, 2.0}) {
    const Symbols head = kneading(a, 60).symbols;
    const DerivBounds da = a_derivative_bounds(a);
    const DerivBounds db[2] = {b_derivative_bounds(a, Symbol::Plus), b_derivative_bounds(a, Symbol::Minus)};
    int outside = 0;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << kTail); ++t) {
      const Word w{symbols_from_bits(t, kTail), head};
      const double fa = fd_derivative(PruningFunction::PMinusQ, w, {a, 0.0}, 1.0, 0.0).value;
      const double fb = fd_derivative(PruningFunction::PMinusQ, w, {a, 0.0}, 0.0, 1.0).value;
      if (!da.contains(fa, 1e-3)) ++outside;
      if (!db[w.at(-2) == Symbol::Plus ? 0 : 1].contains(fb, 1e-3)) ++outside;
    }
    o.require(outside == 0, "a=" + num(a) + ": " + std::to_string(outside) + " of 2x16384 outside");
  }
  const DerivBounds two = a_derivative_bounds(2.0);
  o.require(std::abs(two.lo - 0.75) <= 1e-12 && std::abs(two.hi - 1.0) <= 1e-12, "a=2 interval [0.75, 1]");
  return o;
}

Outcome identity_check(const AcceptanceOptions&) {
  Outcome o;
  constexpr int kN = 40;
  int bad = 0;
  int checked = 0;
  for (int k = 0; k <= 18; ++k) {
    const double a = 1.1 + 0.05 * k;
    const Symbols prefix = kneading(a, kN + 6).symbols;
    if (check_identity_sum(a, prefix, kN) > identity_sum_tail_bound(a, kN) + 1e-12) ++bad;
    ++checked;
    for (int i = 0; i <= 5; ++i) {
      if (check_identity_shifted(a, prefix, i, kN) > identity_shifted_tail_bound(a, i, kN) + 1e-12) ++bad;
      ++checked;
    }
  }
  o.require(bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) +
                          " residuals within tail bounds (a = 1.1 ... 2.0, i <= 5, n = 40)");
  return o;
}

Outcome entropy_bracket_check(const AcceptanceOptions&) {
  Outcome o;
  const auto t0 = Clock::now();
  struct Case {
    Params p;
    double target;
  };
  for (const Case& c : {Case{{2.1, 0.05}, std::log(2.0)}, Case{{1.7, 0.0}, std::log(1.7)}}) {
    const EntropyBracket e = entropy_estimate(c.p, 16, 30);
    const bool in = e.h_lower - 0.05 <= c.target && c.target <= e.h_upper + 0.05;
    o.require(in, "(" + num(c.p.a) + "," + num(c.p.b) + "): [" + num(e.h_lower) + ", " + num(e.h_upper) +
                      "] vs " + num(c.target));
    if (c.p.b == 0.0) {
      const double lap = tent_entropy_lap_growth(c.p.a, 16);
      o.require(e.h_lower - 0.05 <= lap && lap <= e.h_upper + 0.05 && std::abs(lap - c.target) <= 0.05,
                "tent lap oracle " + num(lap));
    }
  }
  o.require(seconds_since(t0) < 300.0, "runtime under 5 min");
  return o;
}

Outcome monotonicity_check(const AcceptanceOptions&) {
  Outcome o;
  double running_max = -INFINITY;
  double worst_drop = 0.0;
  double first = 0.0;
  double last = 0.0;
  for (int k = 0; k <= 24; ++k) {
    const double a = 1.4 + 0.025 * k;
    const double h = entropy_estimate({a, 0.02}, 16, 30).h_upper;
    if (k == 0) first = h;
    last = h;
    worst_drop = std::max(worst_drop, running_max - h);
    running_max = std::max(running_max, h);
  }
  o.require(worst_drop <= 0.02, "h_upper along a = 1.4 ... 2.0 (25 points, b = 0.02) from " + num(first) +
                                    " to " + num(last) + ", largest drop " + num(worst_drop));
  return o;
}

Outcome geometry_check(const AcceptanceOptions& opt) {
  Outcome o;
  const Params p{1.0, 0.5};
  const FixedData fd = fixed_data(p);
  const double fixed_res = distance(lozi_apply(p, fd.p1->point), fd.p1->point);
  const double per2_res = std::max(distance(lozi_apply_n(p, *fd.n1, 2), *fd.n1),
                                   distance(lozi_apply_n(p, *fd.n2, 2), *fd.n2));
  o.require(fixed_res <= 1e-12 && per2_res <= 1e-12,
            "residuals p1 " + num(fixed_res) + ", n1/n2 " + num(per2_res));
  o.require(distance(*fd.n1, {1.2, -0.4}) <= 1e-12, "n1 = (6/5, -2/5)");

  const InvarianceReport rep = polygon_invariance(p);
  std::mt19937_64 rng(opt.seed);
  double lo_x = INFINITY, hi_x = -INFINITY, lo_y = INFINITY, hi_y = -INFINITY;
  for (const PlanePoint& c : rep.corners) {
    lo_x = std::min(lo_x, c.x);
    hi_x = std::max(hi_x, c.x);
    lo_y = std::min(lo_y, c.y);
    hi_y = std::max(hi_y, c.y);
  }
  std::uniform_real_distribution<double> ux(lo_x, hi_x);
  std::uniform_real_distribution<double> uy(lo_y, hi_y);
  double worst = 0.0;
  for (int n = 0; n < 1000;) {
    const PlanePoint q{ux(rng), uy(rng)};
    if (signed_distance_to_polygon(rep.corners, q) <= 0.0) continue;
    ++n;
    const PlanePoint d = q - PlanePoint{1.2, -0.4};
    worst = std::max(worst, std::abs(lyapunov_delta(p, q) + 15.0 / 16.0 * dot(d, d)));
  }
  o.require(worst <= 1e-12, "Lyapunov identity on 1000 points of P (max residual " + num(worst) + ")");
  o.require(distance(rep.l8z, {1.223, -0.375}) <= 1e-3,
            "L^8(Z) = (" + num(rep.l8z.x) + ", " + num(rep.l8z.y) + ")");
  o.require(rep.invariant, "L^2(P) in P (margin " + num(rep.margin) + ")");
  return o;
}

Outcome classifier_check(const AcceptanceOptions& opt) {
  Outcome o;
  struct Case {
    Params p;
    ZeroEntropyKind kind;
    int analytic;
  };
  for (const Case& c : {Case{{1.0, 0.5}, ZeroEntropyKind::NumericZero, 0},
                        Case{{0.2, 0.5}, ZeroEntropyKind::AnalyticZero, 2},
                        Case{{1.7, 0.5}, ZeroEntropyKind::Homoclinic, 0}}) {
    const ZeroEntropyVerdict v = classify_zero_entropy(c.p);
    o.require(v.kind == c.kind && v.analytic_case == c.analytic,
              "(" + num(c.p.a) + "," + num(c.p.b) + ") -> " + describe(v));
  }
  const int n = opt.scan_resolution;
  const auto t0 = Clock::now();
  const ZeroScan scan = scan_zero_entropy({0.0, 2.5}, {0.0, 1.0}, {n, n});
  const double t = seconds_since(t0);
  int strip_bad = 0, strip = 0, block_bad = 0, block = 0, right_bad = 0, right = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double a = scan.a_values[i];
      const double b = scan.b_values[j];
      const ZeroEntropyKind k = scan.at(i, j).kind;
      if (a < 1.0 - b) {
        ++strip;
        if (k != ZeroEntropyKind::AnalyticZero) ++strip_bad;
      }
      if (std::abs(a - 1.0) <= 0.05 + 1e-9 && std::abs(b - 0.5) <= 0.05 + 1e-9) {
        ++block;
        if (k != ZeroEntropyKind::NumericZero) ++block_bad;
      }
      if (a >= 2.0) {
        ++right;
        if (k != ZeroEntropyKind::Homoclinic) ++right_bad;
      }
    }
  }
  const auto tally = [](int bad, int all) { return std::to_string(all - bad) + "/" + std::to_string(all); };
  o.require(t < 600.0, std::to_string(n) + "x" + std::to_string(n) + " scan under 10 min");
  o.require(strip_bad == 0 && strip > 0, "a < 1-b strip analytic " + tally(strip_bad, strip));
  o.require(block_bad == 0 && block > 0, "(1,0.5) block numeric zero " + tally(block_bad, block));
  o.require(right_bad == 0 && right > 0, "a >= 2 homoclinic " + tally(right_bad, right));
  return o;
}

Outcome pfc_check(const AcceptanceOptions& opt) {
  Outcome o;
  constexpr int kSide = 14;
  constexpr int kOrbits = 4;
  constexpr int kWindowsPerOrbit = 250;
  const Params p{1.7, 0.5};
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> start(-0.1, 0.1);
  int pruned = 0;
  int windows = 0;
  for (int orbit = 0; orbit < kOrbits; ++orbit) {
    PlanePoint x{start(rng), start(rng)};
    for (int i = 0; i < 1000; ++i) x = lozi_apply(p, x);
    Symbols itinerary;
    double radius = 0.0;
    for (int i = 0; i < kWindowsPerOrbit + 2 * kSide; ++i) {
      itinerary.push_back(symbol_of_sign(x.x));
      radius = std::max(radius, norm(x));
      x = lozi_apply(p, x);
    }
    if (!(radius < 10.0)) throw Error(ErrorKind::InvalidArgument, "orbit is not bounded");
    for (int t = kSide; t < kWindowsPerOrbit + kSide; ++t) {
      const Word w{Symbols(itinerary.begin() + (t - kSide), itinerary.begin() + t),
                   Symbols(itinerary.begin() + t, itinerary.begin() + (t + kSide))};
      if (classify_cylinder(w, 30, 0, p) == Verdict::CertifiedPruned) ++pruned;
      ++windows;
    }
  }
  o.require(pruned == 0, std::to_string(windows) + " windows (14.14) from bounded orbits, " +
                             std::to_string(pruned) + " certified pruned");
  return o;
}

Outcome determinism_check(const AcceptanceOptions& opt) {
  Outcome o;
  namespace fs = std::filesystem;
  RunConfig config;
  config.command = "verify";
  config.seed = opt.seed;
  const fs::path base = fs::temp_directory_path() / ("lozi-determinism-" + std::to_string(::getpid()));
  const fs::path dirs[2] = {base / "run1", base / "run2"};
  std::vector<std::string> names;
  for (const fs::path& d : dirs) {
    const std::vector<Artifact> artifacts = verify_artifacts(config);
    write_artifacts(d.string(), artifacts, config, true);
    names.clear();
    for (const Artifact& a : artifacts) names.push_back(a.first);
    names.push_back("run_config.txt");
  }
  const auto slurp = [](const fs::path& f) {
    std::ifstream in(f, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  int differing = 0;
  for (const std::string& name : names) {
    if (slurp(dirs[0] / name) != slurp(dirs[1] / name)) ++differing;
  }
  std::error_code ec;
  fs::remove_all(base, ec);
  o.require(differing == 0, std::to_string(names.size()) + " artifacts written twice, " +
                                std::to_string(differing) + " differ");
  return o;
}

struct Criterion {
  const char* title;
  Outcome (*run)(const AcceptanceOptions&);
};

constexpr Criterion kCriteria[kCriterionCount] = {
    {"closed-form q", closed_form_q_check},
    {"q maximum at (2,0)", q_maximum_check},
    {"D_{2,0} empty", d20_empty_check},
    {"derivative anchors", derivative_anchor_check},
    {"bound lemmas", bound_lemma_check},
    {"kneading identities", identity_check},
    {"entropy brackets", entropy_bracket_check},
    {"monotonicity along a", monotonicity_check},
    {"geometry at (1,0.5)", geometry_check},
    {"zero-entropy classifier", classifier_check},
    {"pruning front consistency", pfc_check},
    {"determinism", determinism_check},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::InvalidArgument, "no such criterion");
  const Criterion& c = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  const auto t0 = Clock::now();
  try {
    const Outcome o = c.run(options);
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream* progress) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(run_criterion(id, options));
    if (progress) *progress << format_result(results.back(), true) << std::endl;
  }
  return results;
}

std::string format_result(const CriterionResult& r, bool with_time) {
  std::string line = r.pass ? "PASS " : "FAIL ";
  line += (r.id < 10 ? " " : "") + std::to_string(r.id) + " " + r.title + ": " + r.detail;
  if (with_time) line += " (" + num(r.seconds) + " s)";
  return line;
}

}  // namespace lozi::cli
