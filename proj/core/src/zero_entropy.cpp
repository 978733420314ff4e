#include <cmath>
#include <string>

#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/parallel.hpp"

namespace lozi {

const char* to_string(ZeroEntropyKind kind) noexcept {
  switch (kind) {
    case ZeroEntropyKind::AnalyticZero: return "AnalyticZero";
    case ZeroEntropyKind::NumericZero: return "NumericZero";
    case ZeroEntropyKind::Homoclinic: return "Homoclinic";
    case ZeroEntropyKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string describe(const ZeroEntropyVerdict& verdict) {
  std::string out = to_string(verdict.kind);
  if (verdict.kind == ZeroEntropyKind::AnalyticZero) {
    static const char* const roman[] = {"", "i", "ii", "iii"};
    out += '(';
    out += roman[verdict.analytic_case];
    out += ')';
  }
  return out;
}

int analytic_zero_case(const Params& params) noexcept {
  const double a = params.a;
  const double b = params.b;
  if (-1.0 <= b && b < 0.0 && a <= b - 1.0) return 1;
  if (0.0 < b && b <= 1.0) {
    if (a < 1.0 - b - 1e-12) return 2;
    if (std::abs(a - (1.0 - b)) <= 1e-12) return 3;
  }
  return 0;
}

namespace {

/// Samples of both straight fundamental arcs of W^u(p1) all reach the
/// period-two orbit under L^4.
bool unstable_branches_settle(const Params& params, const FixedData& fd) {
  constexpr int kSamples = 64;
  const FixedPoint& p1 = *fd.p1;
  const PlanePoint p = p1.point;
  const double lambda = p1.lambda_unstable;
  const PlanePoint z{p.x - lambda * p.y, 0.0};
  const PlanePoint ends[] = {z, p + lambda * (z - p)};
  for (const PlanePoint end : ends) {
    const PlanePoint start = p + (1.0 / (lambda * lambda)) * (end - p);
    for (int k = 0; k < kSamples; ++k) {
      PlanePoint q = start + ((k + 0.5) / kSamples) * (end - start);
      bool settled = false;
      for (int it = 0; it < kNumericZeroMaxIter; ++it) {
        q = lozi_apply_n(params, q, 4);
        if (std::min(distance(q, *fd.n1), distance(q, *fd.n2)) < kNumericZeroTol) {
          settled = true;
          break;
        }
        if (!std::isfinite(q.x) || std::abs(q.x) > 1e6) break;
      }
      if (!settled) return false;
    }
  }
  return true;
}

}  // namespace

ZeroEntropyVerdict classify_zero_entropy(const Params& params, double arc_budget) {
  ZeroEntropyVerdict v;
  if (const int c = analytic_zero_case(params); c != 0) {
    v.kind = ZeroEntropyKind::AnalyticZero;
    v.analytic_case = c;
    return v;
  }
  const HomoclinicResult h = homoclinic_intersects(params, arc_budget);
  if (h.kind == HomoclinicKind::Yes) {
    v.kind = ZeroEntropyKind::Homoclinic;
    v.witness = h.witness;
    return v;
  }
  if (h.kind == HomoclinicKind::NearMiss) {
    v.witness = h.witness;
    return v;
  }
  const FixedData fd = fixed_data(params);
  if (fd.p1 && fd.p1->saddle() && fd.period2_attracting() && unstable_branches_settle(params, fd)) {
    v.kind = ZeroEntropyKind::NumericZero;
  }
  return v;
}

ZeroScan scan_zero_entropy(std::array<double, 2> a_range, std::array<double, 2> b_range,
                           std::array<int, 2> resolution, double arc_budget, int threads) {
  if (resolution[0] <= 0 || resolution[1] <= 0) {
    throw Error(ErrorKind::InvalidArgument, "scan resolution must be positive");
  }
  ZeroScan scan;
  scan.width = resolution[0];
  scan.height = resolution[1];
  for (int i = 0; i < scan.width; ++i) {
    scan.a_values.push_back(a_range[0] + (i + 1) * (a_range[1] - a_range[0]) / scan.width);
  }
  for (int j = 0; j < scan.height; ++j) {
    scan.b_values.push_back(b_range[0] + (j + 1) * (b_range[1] - b_range[0]) / scan.height);
  }
  scan.cells.resize(static_cast<std::size_t>(scan.width) * scan.height);
  parallel_for(scan.cells.size(), threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx % scan.width);
    const int j = static_cast<int>(idx / scan.width);
    try {
      scan.cells[idx] = classify_zero_entropy(Params{scan.a_values[i], scan.b_values[j]}, arc_budget);
    } catch (const Error&) {
      scan.cells[idx] = ZeroEntropyVerdict{};
    }
  });
  return scan;
}

}  // namespace lozi
