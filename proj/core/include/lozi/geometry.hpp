#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lozi/pruning.hpp"

namespace lozi {

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend constexpr PlanePoint operator+(PlanePoint p, PlanePoint q) noexcept { return {p.x + q.x, p.y + q.y}; }
  friend constexpr PlanePoint operator-(PlanePoint p, PlanePoint q) noexcept { return {p.x - q.x, p.y - q.y}; }
  friend constexpr PlanePoint operator*(double s, PlanePoint p) noexcept { return {s * p.x, s * p.y}; }
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

inline double norm(PlanePoint p) noexcept { return std::hypot(p.x, p.y); }
inline double distance(PlanePoint p, PlanePoint q) noexcept { return norm(p - q); }
constexpr double cross(PlanePoint p, PlanePoint q) noexcept { return p.x * q.y - p.y * q.x; }
constexpr double dot(PlanePoint p, PlanePoint q) noexcept { return p.x * q.x + p.y * q.y; }

// --- The map --------------------------------------------------------------

/// L(x, y) = (1 - a|x| + b y, x).
constexpr PlanePoint lozi_apply(const Params& params, PlanePoint p) noexcept {
  return {1.0 - params.a * (p.x < 0.0 ? -p.x : p.x) + params.b * p.y, p.x};
}

PlanePoint lozi_apply_n(const Params& params, PlanePoint p, int n) noexcept;

/// L^{-1}(x, y) = (y, (x - 1 + a|y|) / b). Throws NonInvertible when b = 0.
PlanePoint lozi_inverse(const Params& params, PlanePoint p);

/// Jacobian determinant -b on either affine piece: L reverses orientation
/// for b > 0 and preserves it for b < 0.
constexpr double lozi_jacobian_det(const Params& params) noexcept { return -params.b; }

// --- Fixed and period-two points ----------------------------------------

/// A fixed point with the eigen-data of the affine piece containing it.
/// Eigenvectors are (lambda, 1); `stable` has the smaller modulus.
struct FixedPoint {
  PlanePoint point;
  bool real_eigenvalues = false;
  double lambda_stable = 0.0;
  double lambda_unstable = 0.0;

  bool saddle() const noexcept {
    return real_eigenvalues && std::abs(lambda_stable) < 1.0 && std::abs(lambda_unstable) > 1.0;
  }
  PlanePoint stable_dir() const noexcept { return {lambda_stable, 1.0}; }
  PlanePoint unstable_dir() const noexcept { return {lambda_unstable, 1.0}; }
};

struct FixedData {
  std::optional<FixedPoint> p1;  ///< (1/(1+a-b), 1/(1+a-b)), first quadrant
  std::optional<FixedPoint> p2;  ///< (1/(1-a-b), 1/(1-a-b)), third quadrant
  std::optional<PlanePoint> n1;  ///< period two, fourth quadrant
  std::optional<PlanePoint> n2;  ///< period two, second quadrant
  /// Spectral radius of DL^2 along the period-two orbit (when it exists).
  double period2_spectral_radius = 0.0;

  bool period2_attracting() const noexcept { return n1 && period2_spectral_radius < 1.0; }
  /// Two saddles and an attracting period-two orbit: 0 < b < 1, 1-b < a < 1+b.
  bool full_structure() const noexcept {
    return p1 && p1->saddle() && p2 && p2->saddle() && period2_attracting();
  }
};

/// Throws NoFixedPoint when L has no fixed point (a <= b - 1 and a <= 1 - b).
FixedData fixed_data(const Params& params);

/// Z: where the unstable eigenline p1 + t (-lambda_u, -1), t > 0, meets y = 0.
/// Throws NoFixedPoint / WrongParams when p1 is missing or not a saddle.
PlanePoint unstable_axis_point(const Params& params);

// --- Invariant manifolds --------------------------------------------------

enum class PolylineKind {
  UnstableRight,         ///< p1 branch through Z
  UnstableLeft,          ///< p1 branch through L(Z)
  UnstableLeftHalfline,  ///< p2 + t (-lambda_u, -1), t > 0
  StableHalfline,        ///< p1 + t (lambda_s, 1), t > 0
  StableGrown,           ///< p1 stable branch through x = 0, grown by L^{-1}
};

const char* to_string(PolylineKind kind) noexcept;

struct Polyline {
  std::vector<PlanePoint> vertices;
  PolylineKind kind = PolylineKind::UnstableRight;

  double arc_length() const noexcept;
};

struct ManifoldResult {
  Polyline polyline;
  /// The branch continues past the returned piece (arc budget, iteration or
  /// vertex cap reached). False when growth converged.
  bool budget_exceeded = false;
  int iterations = 0;
};

enum class UnstableSeed { P1Right, P1Left, P2 };

inline constexpr double kDefaultFlatTol = 1e-12;

/// Grows an unstable branch by iterating its fundamental arc, inserting an
/// exact vertex wherever a segment crosses the kink line x = 0.
ManifoldResult unstable_manifold(const Params& params, UnstableSeed seed, double arc_budget,
                                 double flat_tol = kDefaultFlatTol);

enum class StableSide { Halfline, Grown };

/// Stable branches of p1; the grown side needs 0 < b (inverse map, and the
/// stable eigenvalue must be positive).
ManifoldResult stable_manifold(const Params& params, StableSide side, double arc_budget,
                               double flat_tol = kDefaultFlatTol);

// --- Lyapunov certificate and polygon invariance --------------------------

/// V(L^4(q)) - V(q) with V(x, y) = (x - n1.x)^2 + (y - n1.y)^2.
double lyapunov_delta(const Params& params, PlanePoint q);

struct InvarianceReport {
  std::array<PlanePoint, 4> corners{};  ///< Z, L^2 Z, L^4 Z, L^6 Z
  PlanePoint l8z;                       ///< L^8 Z
  bool convex = false;
  bool invariant = false;
  /// Smallest signed distance (inside positive) from a vertex of the image
  /// boundary L^2(dP) to dP, ignoring image vertices that coincide with
  /// corners of P.
  double margin = 0.0;
  PlanePoint witness;  ///< the vertex realising `margin`
};

/// Builds P from Z and checks L^2(P) subset P by mapping the boundary of P
/// (kinks inserted exactly) and testing every image vertex.
InvarianceReport polygon_invariance(const Params& params);

/// Signed distance from q to the boundary of a simple polygon, positive inside.
double signed_distance_to_polygon(std::span<const PlanePoint> polygon, PlanePoint q);

// --- Homoclinic detection and the zero-entropy classifier ----------------

enum class HomoclinicKind { Yes, NoWithinBudget, NearMiss };

struct HomoclinicResult {
  HomoclinicKind kind = HomoclinicKind::NoWithinBudget;
  PlanePoint witness;
  double unstable_arc = 0.0;  ///< arc-length position of the witness on the unstable polyline
  double stable_arc = 0.0;
  PolylineKind unstable_branch = PolylineKind::UnstableRight;
  PolylineKind stable_branch = PolylineKind::StableHalfline;
};

inline constexpr double kDefaultArcBudget = 40.0;

/// Transversal crossing of an unstable branch of p1 with a stable branch of
/// p1, other than p1 itself. Near-parallel crossings or crossings through
/// vertices are reported as NearMiss unless a clean crossing also exists.
/// Throws NonInvertible for b = 0 and WrongParams for b < 0.
HomoclinicResult homoclinic_intersects(const Params& params, double arc_budget = kDefaultArcBudget);

enum class ZeroEntropyKind : std::uint8_t { AnalyticZero, NumericZero, Homoclinic, Unknown };

struct ZeroEntropyVerdict {
  ZeroEntropyKind kind = ZeroEntropyKind::Unknown;
  int analytic_case = 0;  ///< 1, 2 or 3 for AnalyticZero
  std::optional<PlanePoint> witness;
};

const char* to_string(ZeroEntropyKind kind) noexcept;
std::string describe(const ZeroEntropyVerdict& verdict);

/// Which closed-form zero-entropy region (1, 2, 3) holds, or 0.
int analytic_zero_case(const Params& params) noexcept;

inline constexpr double kNumericZeroTol = 1e-8;
inline constexpr int kNumericZeroMaxIter = 10000;

ZeroEntropyVerdict classify_zero_entropy(const Params& params, double arc_budget = kDefaultArcBudget);

struct ZeroScan {
  int width = 0;   ///< samples along a
  int height = 0;  ///< samples along b
  std::vector<double> a_values;
  std::vector<double> b_values;
  std::vector<ZeroEntropyVerdict> cells;  ///< row-major, row j = b_values[j]

  const ZeroEntropyVerdict& at(int i, int j) const { return cells[static_cast<std::size_t>(j) * width + i]; }
};

/// Grid over (a_lo, a_hi] x (b_lo, b_hi] at cell right endpoints:
/// a_i = a_lo + (i + 1)(a_hi - a_lo) / width. Per-pixel failures become Unknown.
ZeroScan scan_zero_entropy(std::array<double, 2> a_range, std::array<double, 2> b_range,
                           std::array<int, 2> resolution, double arc_budget = kDefaultArcBudget,
                           int threads = 0);

// --- The a = 1 + b period-four segment -----------------------------------

struct Period4Segment {
  double a = 0.0;
  double b = 0.0;
  double intercept = 0.0;  ///< the line y = -x + intercept
  double x_min = 0.0;      ///< constrained part of the line: x in [x_min, x_max]
  double x_max = 0.0;

  /// 1 + ax + by >= 0, 1 - a(1 + ax + by) + bx <= 0 and x <= 0.
  bool satisfies_constraints(PlanePoint p, double tol = 0.0) const noexcept;
  PlanePoint point_at(double x) const noexcept { return {x, -x + intercept}; }
};

/// Throws WrongParams unless b > 0 and a = 1 + b.
Period4Segment period4_segment(const Params& params);
inline Period4Segment period4_segment(double b) { return period4_segment(Params{1.0 + b, b}); }

/// max |L^4(q) - q| over `samples` evenly spaced constrained points.
double period4_residual(const Period4Segment& segment, int samples);

}  // namespace lozi
