#include <algorithm>
#include <array>
#include <cstdint>
#include <cmath>
#include <limits>

#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "plane_ops.hpp"

namespace lozi {

const char* to_string(PolylineKind kind) noexcept {
  switch (kind) {
    case PolylineKind::UnstableRight: return "unstable_right";
    case PolylineKind::UnstableLeft: return "unstable_left";
    case PolylineKind::UnstableLeftHalfline: return "unstable_left_halfline";
    case PolylineKind::StableHalfline: return "stable_halfline";
    case PolylineKind::StableGrown: return "stable_grown";
  }
  return "?";
}

double Polyline::arc_length() const noexcept { return detail::chain_length(vertices); }

namespace {

constexpr int kMaxGrowthSteps = 20000;
constexpr std::size_t kMaxVertices = 2'000'000;
constexpr double kConvergedLength = 1e-14;

/// Appends chain[1..] to poly, stopping at total length `budget`.
/// Returns false when the budget cut the chain short.
bool append_within(std::vector<PlanePoint>& poly, double& arc, const std::vector<PlanePoint>& chain,
                   double budget) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const double len = distance(poly.back(), chain[i]);
    if (!(arc + len < budget)) {
      const double t = len > 0.0 ? (budget - arc) / len : 0.0;
      if (t > 0.0) poly.push_back(poly.back() + t * (chain[i] - poly.back()));
      arc = budget;
      return false;
    }
    poly.push_back(chain[i]);
    arc += len;
  }
  return true;
}

/// The branch is `prefix` followed by successive images of the fundamental
/// arc `domain`, whose last point is prefix.back().
ManifoldResult grow(const Params& params, std::vector<PlanePoint> prefix, std::vector<PlanePoint> domain,
                    int steps, bool inverse, double arc_budget, double flat_tol, PolylineKind kind) {
  ManifoldResult res;
  res.polyline.kind = kind;
  std::vector<PlanePoint>& poly = res.polyline.vertices;
  poly.push_back(prefix.front());
  double arc = 0.0;
  if (!append_within(poly, arc, prefix, arc_budget)) {
    res.budget_exceeded = true;
    return res;
  }
  std::vector<PlanePoint> arc_chain = std::move(domain);
  for (int it = 1; it <= kMaxGrowthSteps; ++it) {
    res.iterations = it;
    arc_chain = detail::map_chain(params, arc_chain, steps, inverse);
    arc_chain.front() = poly.back();
    detail::simplify_chain(arc_chain, flat_tol);
    const double len = detail::chain_length(arc_chain);
    if (!std::isfinite(len) || !append_within(poly, arc, arc_chain, arc_budget)) {
      res.budget_exceeded = true;
      return res;
    }
    if (len < kConvergedLength) return res;
    if (poly.size() > kMaxVertices) break;
  }
  res.budget_exceeded = true;
  return res;
}

ManifoldResult halfline(PlanePoint origin, PlanePoint dir, double arc_budget, PolylineKind kind) {
  ManifoldResult res;
  res.polyline.kind = kind;
  res.polyline.vertices = {origin, origin + (arc_budget / norm(dir)) * dir};
  res.budget_exceeded = true;
  return res;
}

FixedPoint require_saddle(const std::optional<FixedPoint>& fp, const char* name) {
  if (!fp) throw Error(ErrorKind::NoFixedPoint, std::string(name) + " does not exist");
  if (!fp->saddle()) throw Error(ErrorKind::WrongParams, std::string(name) + " is not a saddle");
  return *fp;
}

}  // namespace

ManifoldResult unstable_manifold(const Params& params, UnstableSeed seed, double arc_budget,
                                 double flat_tol) {
  if (!(arc_budget > 0.0)) throw Error(ErrorKind::InvalidArgument, "arc budget must be positive");
  const FixedData fd = fixed_data(params);
  if (seed == UnstableSeed::P2) {
    const FixedPoint p2 = require_saddle(fd.p2, "p2");
    return halfline(p2.point, -1.0 * p2.unstable_dir(), arc_budget, PolylineKind::UnstableLeftHalfline);
  }
  const FixedPoint p1 = require_saddle(fd.p1, "p1");
  const double lambda = p1.lambda_unstable;
  const PlanePoint p = p1.point;
  const PlanePoint z{p.x - lambda * p.y, 0.0};
  // One step of L flips the branches, so grow each with L^2.
  const int steps = lambda < 0.0 ? 2 : 1;
  const double factor = std::pow(lambda, steps);
  const PlanePoint end = seed == UnstableSeed::P1Right ? z : p + lambda * (z - p);
  const PlanePoint start = p + (1.0 / factor) * (end - p);
  return grow(params, {p, end}, {start, end}, steps, false, arc_budget, flat_tol,
              seed == UnstableSeed::P1Right ? PolylineKind::UnstableRight : PolylineKind::UnstableLeft);
}

ManifoldResult stable_manifold(const Params& params, StableSide side, double arc_budget, double flat_tol) {
  if (!(arc_budget > 0.0)) throw Error(ErrorKind::InvalidArgument, "arc budget must be positive");
  if (params.b == 0.0) throw Error(ErrorKind::NonInvertible, "stable manifold needs b != 0");
  if (params.b < 0.0) throw Error(ErrorKind::WrongParams, "stable manifold growth needs b > 0");
  const FixedPoint p1 = require_saddle(fixed_data(params).p1, "p1");
  const double lambda = p1.lambda_stable;
  const PlanePoint p = p1.point;
  if (side == StableSide::Halfline) {
    return halfline(p, p1.stable_dir(), arc_budget, PolylineKind::StableHalfline);
  }
  const PlanePoint d{0.0, p.y - p.x / lambda};
  const PlanePoint start = p + lambda * (d - p);
  return grow(params, {p, d}, {start, d}, 1, true, arc_budget, flat_tol, PolylineKind::StableGrown);
}

// --- Homoclinic detection -------------------------------------------------

namespace {

struct SegmentIndex {
  const std::vector<PlanePoint>* chain = nullptr;
  double x0 = 0.0, y0 = 0.0, cell_w = 1.0, cell_h = 1.0;
  int g = 1;
  std::vector<std::vector<std::uint32_t>> cells;

  explicit SegmentIndex(const std::vector<PlanePoint>& c) : chain(&c) {
    const std::size_t nseg = c.size() - 1;
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = x1;
    x0 = y0 = std::numeric_limits<double>::infinity();
    for (const PlanePoint& v : c) {
      x0 = std::min(x0, v.x);
      y0 = std::min(y0, v.y);
      x1 = std::max(x1, v.x);
      y1 = std::max(y1, v.y);
    }
    g = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(nseg))), 1, 128);
    cell_w = std::max((x1 - x0) / g, 1e-300);
    cell_h = std::max((y1 - y0) / g, 1e-300);
    cells.resize(static_cast<std::size_t>(g) * g);
    for (std::size_t s = 0; s < nseg; ++s) {
      const auto [i0, i1, j0, j1] = range(c[s], c[s + 1]);
      for (int j = j0; j <= j1; ++j)
        for (int i = i0; i <= i1; ++i) cells[static_cast<std::size_t>(j) * g + i].push_back(static_cast<std::uint32_t>(s));
    }
  }

  int clamp_cell(double v) const { return static_cast<int>(std::clamp(v, 0.0, static_cast<double>(g - 1))); }

  std::array<int, 4> range(PlanePoint u, PlanePoint v) const {
    return {clamp_cell((std::min(u.x, v.x) - x0) / cell_w), clamp_cell((std::max(u.x, v.x) - x0) / cell_w),
            clamp_cell((std::min(u.y, v.y) - y0) / cell_h), clamp_cell((std::max(u.y, v.y) - y0) / cell_h)};
  }
};

enum class Hit { None, Clean, Near };

struct Crossing {
  Hit hit = Hit::None;
  PlanePoint point;
  double t = 0.0;
  double u = 0.0;
};

constexpr double kCollinearTol = 1e-12;

Crossing intersect(PlanePoint p, PlanePoint p2, PlanePoint q, PlanePoint q2) {
  const PlanePoint r = p2 - p;
  const PlanePoint s = q2 - q;
  const double denom = cross(r, s);
  const double scale = norm(r) * norm(s);
  Crossing out;
  if (scale == 0.0) return out;
  const PlanePoint qp = q - p;
  if (std::abs(denom) <= kCollinearTol * scale) {
    // Parallel: only overlapping collinear pieces matter.
    if (std::abs(cross(qp, r)) > kCollinearTol * norm(r) * std::max(norm(qp), 1.0)) return out;
    const double rr = dot(r, r);
    const double t0 = dot(qp, r) / rr;
    const double t1 = dot(q2 - p, r) / rr;
    const double lo = std::max(0.0, std::min(t0, t1));
    const double hi = std::min(1.0, std::max(t0, t1));
    if (lo > hi) return out;
    out.hit = Hit::Near;
    out.t = lo;
    out.point = p + lo * r;
    return out;
  }
  const double t = cross(qp, s) / denom;
  const double u = cross(qp, r) / denom;
  const double eps = kCollinearTol;
  if (t < -eps || t > 1.0 + eps || u < -eps || u > 1.0 + eps) return out;
  out.t = t;
  out.u = u;
  out.point = p + t * r;
  out.hit = (t > eps && t < 1.0 - eps && u > eps && u < 1.0 - eps) ? Hit::Clean : Hit::Near;
  return out;
}

/// Arc length from chain.front() to the point at parameter t on segment s.
double arc_at(const std::vector<PlanePoint>& chain, std::size_t s, double t) {
  double arc = 0.0;
  for (std::size_t i = 1; i <= s; ++i) arc += distance(chain[i - 1], chain[i]);
  return arc + t * distance(chain[s], chain[s + 1]);
}

}  // namespace

HomoclinicResult homoclinic_intersects(const Params& params, double arc_budget) {
  if (params.b == 0.0) throw Error(ErrorKind::NonInvertible, "homoclinic search needs b != 0");
  const ManifoldResult stable_sides[] = {stable_manifold(params, StableSide::Halfline, arc_budget),
                                         stable_manifold(params, StableSide::Grown, arc_budget)};
  const ManifoldResult unstable_sides[] = {unstable_manifold(params, UnstableSeed::P1Right, arc_budget),
                                           unstable_manifold(params, UnstableSeed::P1Left, arc_budget)};
  const PlanePoint p1 = fixed_data(params).p1->point;
  const double trivial_tol = 1e-9 * std::max(1.0, norm(p1));

  HomoclinicResult near;
  bool have_near = false;
  for (const ManifoldResult& unstable : unstable_sides) {
    const std::vector<PlanePoint>& uc = unstable.polyline.vertices;
    for (const ManifoldResult& stable : stable_sides) {
      const std::vector<PlanePoint>& sc = stable.polyline.vertices;
      if (uc.size() < 2 || sc.size() < 2) continue;
      const SegmentIndex index(sc);
      std::vector<std::uint32_t> seen(sc.size(), std::numeric_limits<std::uint32_t>::max());
      for (std::size_t us = 0; us + 1 < uc.size(); ++us) {
        const auto [i0, i1, j0, j1] = index.range(uc[us], uc[us + 1]);
        std::size_t best_seg = 0;
        Crossing best;
        for (int j = j0; j <= j1; ++j) {
          for (int i = i0; i <= i1; ++i) {
            for (std::uint32_t ss : index.cells[static_cast<std::size_t>(j) * index.g + i]) {
              if (seen[ss] == us) continue;
              seen[ss] = static_cast<std::uint32_t>(us);
              const Crossing c = intersect(uc[us], uc[us + 1], sc[ss], sc[ss + 1]);
              if (c.hit == Hit::None || distance(c.point, p1) <= trivial_tol) continue;
              if (c.hit == Hit::Clean) {
                if (best.hit != Hit::Clean || c.t < best.t || (c.t == best.t && ss < best_seg)) {
                  best = c;
                  best_seg = ss;
                }
              } else if (!have_near) {
                have_near = true;
                near.kind = HomoclinicKind::NearMiss;
                near.witness = c.point;
                near.unstable_arc = arc_at(uc, us, c.t);
                near.stable_arc = arc_at(sc, ss, c.u);
                near.unstable_branch = unstable.polyline.kind;
                near.stable_branch = stable.polyline.kind;
              }
            }
          }
        }
        if (best.hit == Hit::Clean) {
          HomoclinicResult res;
          res.kind = HomoclinicKind::Yes;
          res.witness = best.point;
          res.unstable_arc = arc_at(uc, us, best.t);
          res.stable_arc = arc_at(sc, best_seg, best.u);
          res.unstable_branch = unstable.polyline.kind;
          res.stable_branch = stable.polyline.kind;
          return res;
        }
      }
    }
  }
  if (have_near) return near;
  return HomoclinicResult{};
}

}  // namespace lozi
