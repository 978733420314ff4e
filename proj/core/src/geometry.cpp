#include "lozi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "lozi/error.hpp"
#include "plane_ops.hpp"

namespace lozi {

PlanePoint lozi_apply_n(const Params& params, PlanePoint p, int n) noexcept {
  for (int i = 0; i < n; ++i) p = lozi_apply(params, p);
  return p;
}

PlanePoint lozi_inverse(const Params& params, PlanePoint p) {
  if (params.b == 0.0) throw Error(ErrorKind::NonInvertible, "L is not invertible at b = 0");
  return {p.y, (p.x - 1.0 + params.a * std::abs(p.y)) / params.b};
}

namespace detail {

std::vector<PlanePoint> map_chain(const Params& params, const std::vector<PlanePoint>& chain, int steps,
                                  bool inverse) {
  std::vector<PlanePoint> cur = chain;
  std::vector<PlanePoint> next;
  for (int s = 0; s < steps; ++s) {
    next.clear();
    next.reserve(cur.size() + cur.size() / 4 + 2);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const PlanePoint v = cur[i];
      if (i > 0) {
        const PlanePoint u = cur[i - 1];
        // The forward map bends along x = 0, the inverse along y = 0.
        const double cu = inverse ? u.y : u.x;
        const double cv = inverse ? v.y : v.x;
        if ((cu < 0.0 && cv > 0.0) || (cu > 0.0 && cv < 0.0)) {
          const double t = cu / (cu - cv);
          PlanePoint c = u + t * (v - u);
          (inverse ? c.y : c.x) = 0.0;
          next.push_back(inverse ? lozi_inverse(params, c) : lozi_apply(params, c));
        }
      }
      next.push_back(inverse ? lozi_inverse(params, v) : lozi_apply(params, v));
    }
    cur.swap(next);
  }
  return cur;
}

void simplify_chain(std::vector<PlanePoint>& chain, double flat_tol) {
  if (chain.size() < 2) return;
  std::vector<PlanePoint> out;
  out.reserve(chain.size());
  out.push_back(chain.front());
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const PlanePoint v = chain[i];
    if (v == out.back()) continue;
    if (out.size() >= 2 && i + 1 < chain.size()) {
      const PlanePoint d1 = v - out.back();
      const PlanePoint d2 = chain[i + 1] - v;
      if (dot(d1, d2) > 0.0 && std::abs(cross(d1, d2)) <= flat_tol * norm(d1) * norm(d2)) continue;
    }
    out.push_back(v);
  }
  chain.swap(out);
}

double chain_length(const std::vector<PlanePoint>& chain) noexcept {
  double total = 0.0;
  for (std::size_t i = 1; i < chain.size(); ++i) total += distance(chain[i - 1], chain[i]);
  return total;
}

}  // namespace detail

namespace {

/// Fixed point of the affine branch x -> 1 + c x + b y with c = -a (x > 0) or +a.
FixedPoint affine_fixed_point(double coord, double c, double b) {
  FixedPoint fp;
  fp.point = {coord, coord};
  const double disc = c * c + 4.0 * b;
  if (disc >= 0.0) {
    fp.real_eigenvalues = true;
    const double root = std::sqrt(disc);
    const double l1 = (c + root) / 2.0;
    const double l2 = (c - root) / 2.0;
    const bool first_smaller = std::abs(l1) <= std::abs(l2);
    fp.lambda_stable = first_smaller ? l1 : l2;
    fp.lambda_unstable = first_smaller ? l2 : l1;
  }
  return fp;
}

double spectral_radius(double t, double d) {
  const double disc = t * t - 4.0 * d;
  if (disc < 0.0) return std::sqrt(d);
  const double root = std::sqrt(disc);
  return std::max(std::abs((t + root) / 2.0), std::abs((t - root) / 2.0));
}

}  // namespace

FixedData fixed_data(const Params& params) {
  const double a = params.a;
  const double b = params.b;
  FixedData out;
  if (1.0 + a - b > 0.0) out.p1 = affine_fixed_point(1.0 / (1.0 + a - b), -a, b);
  if (1.0 - a - b < 0.0) out.p2 = affine_fixed_point(1.0 / (1.0 - a - b), a, b);
  if (!out.p1 && !out.p2) {
    throw Error(ErrorKind::NoFixedPoint, "no fixed point for these parameters");
  }
  // Period two with one point on each side of x = 0.
  const double den = (b - 1.0) * (b - 1.0) + a * a;
  const double xr = (1.0 + a - b) / den;
  const double xl = (1.0 - a - b) / den;
  if (xr > 0.0 && xl < 0.0) {
    out.n1 = PlanePoint{xr, xl};
    out.n2 = PlanePoint{xl, xr};
    // DL^2 = [[a, b], [1, 0]] [[-a, b], [1, 0]]: trace 2b - a^2, determinant b^2.
    out.period2_spectral_radius = spectral_radius(2.0 * b - a * a, b * b);
  }
  return out;
}

PlanePoint unstable_axis_point(const Params& params) {
  const FixedData fd = fixed_data(params);
  if (!fd.p1) throw Error(ErrorKind::NoFixedPoint, "no fixed point in the first quadrant");
  if (!fd.p1->saddle()) throw Error(ErrorKind::WrongParams, "p1 is not a saddle");
  const PlanePoint p = fd.p1->point;
  return {p.x - fd.p1->lambda_unstable * p.y, 0.0};
}

double lyapunov_delta(const Params& params, PlanePoint q) {
  const double a = params.a;
  const double b = params.b;
  const double den = (b - 1.0) * (b - 1.0) + a * a;
  const PlanePoint n1{(1.0 + a - b) / den, (1.0 - a - b) / den};
  const auto v = [&](PlanePoint p) {
    const PlanePoint d = p - n1;
    return dot(d, d);
  };
  return v(lozi_apply_n(params, q, 4)) - v(q);
}

namespace {

double segment_distance(PlanePoint q, PlanePoint u, PlanePoint v) {
  const PlanePoint d = v - u;
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(q - u, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(q, u + t * d);
}

bool convex_polygon(std::span<const PlanePoint> poly) {
  const std::size_t n = poly.size();
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint e1 = poly[(i + 1) % n] - poly[i];
    const PlanePoint e2 = poly[(i + 2) % n] - poly[(i + 1) % n];
    const double c = cross(e1, e2);
    const int s = c > 0.0 ? 1 : (c < 0.0 ? -1 : 0);
    if (s == 0) return false;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

}  // namespace

double signed_distance_to_polygon(std::span<const PlanePoint> polygon, PlanePoint q) {
  const std::size_t n = polygon.size();
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "polygon needs at least three corners");
  bool inside = false;
  double dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const PlanePoint u = polygon[j];
    const PlanePoint v = polygon[i];
    dist = std::min(dist, segment_distance(q, u, v));
    if ((v.y > q.y) != (u.y > q.y)) {
      const double xc = v.x + (q.y - v.y) * (u.x - v.x) / (u.y - v.y);
      if (q.x < xc) inside = !inside;
    }
  }
  return inside ? dist : -dist;
}

InvarianceReport polygon_invariance(const Params& params) {
  InvarianceReport rep;
  const PlanePoint z = unstable_axis_point(params);
  for (int k = 0; k < 4; ++k) rep.corners[k] = lozi_apply_n(params, z, 2 * k);
  rep.l8z = lozi_apply_n(params, z, 8);
  rep.convex = convex_polygon(rep.corners);

  std::vector<PlanePoint> boundary(rep.corners.begin(), rep.corners.end());
  boundary.push_back(rep.corners[0]);
  const std::vector<PlanePoint> image = detail::map_chain(params, boundary, 2, false);

  double worst = std::numeric_limits<double>::infinity();
  double margin = std::numeric_limits<double>::infinity();
  PlanePoint witness = image.front();
  constexpr double kCornerTol = 1e-9;
  constexpr double kInsideTol = 1e-12;
  for (const PlanePoint& v : image) {
    const double d = signed_distance_to_polygon(rep.corners, v);
    worst = std::min(worst, d);
    const bool at_corner = std::any_of(rep.corners.begin(), rep.corners.end(),
                                       [&](PlanePoint c) { return distance(c, v) <= kCornerTol; });
    if (!at_corner && d < margin) {
      margin = d;
      witness = v;
    }
  }
  rep.margin = margin;
  rep.witness = witness;
  rep.invariant = rep.convex && worst >= -kInsideTol && margin >= -kInsideTol;
  return rep;
}

bool Period4Segment::satisfies_constraints(PlanePoint p, double tol) const noexcept {
  const double g1 = 1.0 + a * p.x + b * p.y;
  const double g2 = 1.0 - a * g1 + b * p.x;
  return g1 >= -tol && g2 <= tol && p.x <= tol;
}

Period4Segment period4_segment(const Params& params) {
  const double a = params.a;
  const double b = params.b;
  if (!(b > 0.0) || std::abs(a - (1.0 + b)) > 1e-12) {
    throw Error(ErrorKind::WrongParams, "the period-four segment needs b > 0 and a = 1 + b");
  }
  Period4Segment seg;
  seg.a = a;
  seg.b = b;
  seg.intercept = (1.0 - b * b) / (a * (1.0 + b * b));

  // Each constraint is affine in x along the line; intersect the half-lines.
  double lo = -std::numeric_limits<double>::infinity();
  double hi = 0.0;
  const double c = seg.intercept;
  const auto g1 = [&](double x) { return 1.0 + a * x + b * (c - x); };
  const auto neg_g2 = [&](double x) { return -(1.0 - a * g1(x) + b * x); };
  for (const auto& g : {std::function<double(double)>(g1), std::function<double(double)>(neg_g2)}) {
    const double alpha = g(0.0);
    const double beta = g(1.0) - alpha;
    if (beta > 0.0) {
      lo = std::max(lo, -alpha / beta);
    } else if (beta < 0.0) {
      hi = std::min(hi, -alpha / beta);
    } else if (alpha < 0.0) {
      lo = 1.0;
      hi = 0.0;
    }
  }
  if (!(lo <= hi)) throw Error(ErrorKind::WrongParams, "empty constraint region");
  seg.x_min = lo;
  seg.x_max = hi;
  return seg;
}

double period4_residual(const Period4Segment& segment, int samples) {
  const Params params{segment.a, segment.b};
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = samples == 1 ? 0.5 : static_cast<double>(i) / (samples - 1);
    const PlanePoint q = segment.point_at(segment.x_min + t * (segment.x_max - segment.x_min));
    worst = std::max(worst, distance(lozi_apply_n(params, q, 4), q));
  }
  return worst;
}

}  // namespace lozi
