#pragma once

#include "lozi/pruning.hpp"
#include "lozi/symbolic.hpp"

namespace lozi {

enum class Direction { DA, DB };

/// Two-sided bound on a partial derivative of (p - q) at (a, 0).
struct DerivBounds {
  double lo = 0.0;
  double hi = 0.0;
  Params at;
  Direction direction = Direction::DA;
  Symbol eps_minus2 = Symbol::Plus;  ///< only meaningful for Direction::DB

  bool contains(double v, double tol = 0.0) const noexcept { return lo - tol <= v && v <= hi + tol; }
};

/// dp/db at b = 0 equals -s_{-2}|_{b=0} = 1 / (a eps_{-2}).
double dp_db_at_b0(const Word& w, double a);

/// dq/db at b = 0 on the head (+1,-1,-1,...): (1 - 2/a) / (a (a-1)^2).
double dq_db_at_b0(double a);

/// (a^3+2a^2-6a+2) / (2a^2(a-1)) <= d(p-q)/da <= (a^3+2a^2-6a+4) / (2a^2(a-1)),
/// valid at (a, 0) on heads in kappa(a), 1 < a <= 2.
DerivBounds a_derivative_bounds(double a);

/// 1/(a eps_{-2}) - (-2a^2+7a-2) / (2a^3(a-1)) <= d(p-q)/db
///   <= 1/(a eps_{-2}) - (-2a^2+7a-8) / (2a^3(a-1)), same hypotheses.
DerivBounds b_derivative_bounds(double a, Symbol eps_minus2);

/// Bounds on dq/db alone (the b-bounds without the dp/db term).
DerivBounds q_b_derivative_bounds(double a);

/// Positive parameter-plane directions (N1, -1) and (N2, +1) along which the
/// directional derivative of (p - q) is bounded below by `margin`.
struct MonotoneCone {
  double a = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
};

inline constexpr double kDefaultConeMargin = 1e-6;

/// N1 = (max_eps hi_b + margin) / lo_a and N2 = (margin - min_eps lo_b) / lo_a,
/// each floored at margin / lo_a so they stay positive. Throws DegenerateBounds
/// when lo_a <= 0 (a below ~1.3488, where the a-bound loses its sign).
MonotoneCone monotone_cone(double a, double margin = kDefaultConeMargin);

/// Which pruning function a finite difference acts on.
enum class PruningFunction { P, Q, PMinusQ };

struct FdResult {
  double value = 0.0;      ///< central difference with step h
  double half_step = 0.0;  ///< central difference with step h/2
  /// 4/3 |D(h) - D(h/2)|: Richardson estimate of the O(h^2) error in `value`.
  double error_estimate = 0.0;
};

inline constexpr double kDefaultFdStep = 1e-6;

/// Derivative of f(w) along `dir` = (da, db): d/dt f(a + t da, b + t db).
/// f is evaluated with every symbol of w; w should be long enough that the
/// truncation error is far below h^2. Throws NotHyperbolic when a stencil
/// point leaves the hyperbolic region.
FdResult fd_derivative(PruningFunction f, const Word& w, const Params& params, double dir_a,
                       double dir_b, double h = kDefaultFdStep);

/// Point value of f on w using every available symbol.
double pruning_value(PruningFunction f, const Word& w, const Params& params);

}  // namespace lozi
