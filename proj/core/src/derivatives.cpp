#include "lozi/derivatives.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lozi/error.hpp"

namespace lozi {

namespace {

void require_tent_range(double a) {
  if (!(a > 1.0 && a <= 2.0)) {
    throw Error(ErrorKind::InvalidArgument, "derivative bounds need 1 < a <= 2");
  }
}

}  // namespace

double dp_db_at_b0(const Word& w, double a) {
  return 1.0 / (a * value(w.at(-2)));
}

double dq_db_at_b0(double a) {
  require_tent_range(a);
  return (1.0 - 2.0 / a) / (a * (a - 1.0) * (a - 1.0));
}

DerivBounds a_derivative_bounds(double a) {
  require_tent_range(a);
  const double den = 2.0 * a * a * (a - 1.0);
  const double cubic = a * a * a + 2.0 * a * a - 6.0 * a;
  return DerivBounds{(cubic + 2.0) / den, (cubic + 4.0) / den, Params{a, 0.0}, Direction::DA,
                     Symbol::Plus};
}

DerivBounds q_b_derivative_bounds(double a) {
  require_tent_range(a);
  const double den = 2.0 * a * a * a * (a - 1.0);
  const double quad = -2.0 * a * a + 7.0 * a;
  return DerivBounds{(quad - 8.0) / den, (quad - 2.0) / den, Params{a, 0.0}, Direction::DB,
                     Symbol::Plus};
}

DerivBounds b_derivative_bounds(double a, Symbol eps_minus2) {
  const DerivBounds q = q_b_derivative_bounds(a);
  const double dp = 1.0 / (a * value(eps_minus2));
  return DerivBounds{dp - q.hi, dp - q.lo, Params{a, 0.0}, Direction::DB, eps_minus2};
}

MonotoneCone monotone_cone(double a, double margin) {
  const DerivBounds da = a_derivative_bounds(a);
  if (da.lo <= 0.0) {
    std::ostringstream msg;
    msg << "a-derivative lower bound " << da.lo << " is not positive at a = " << a;
    throw Error(ErrorKind::DegenerateBounds, msg.str());
  }
  const double hi_b = std::max(b_derivative_bounds(a, Symbol::Plus).hi,
                               b_derivative_bounds(a, Symbol::Minus).hi);
  const double lo_b = std::min(b_derivative_bounds(a, Symbol::Plus).lo,
                               b_derivative_bounds(a, Symbol::Minus).lo);
  const double floor = margin / da.lo;
  // N1 lo_a - hi_b >= margin and N2 lo_a + lo_b >= margin.
  return MonotoneCone{a, std::max((hi_b + margin) / da.lo, floor),
                      std::max((margin - lo_b) / da.lo, floor)};
}

double pruning_value(PruningFunction f, const Word& w, const Params& params) {
  const int tail_depth = std::max<int>(0, static_cast<int>(w.tail_len()) - 2);
  const int head_depth = std::max<int>(0, static_cast<int>(w.head_len()) - 1);
  switch (f) {
    case PruningFunction::P: return p_interval(w.tail, tail_depth, params).mid();
    case PruningFunction::Q: return q_interval(w.head, head_depth, params).mid();
    case PruningFunction::PMinusQ:
      return p_interval(w.tail, tail_depth, params).mid() -
             q_interval(w.head, head_depth, params).mid();
  }
  return 0.0;
}

FdResult fd_derivative(PruningFunction f, const Word& w, const Params& params, double dir_a,
                       double dir_b, double h) {
  auto central = [&](double step) {
    const Params plus{params.a + step * dir_a, params.b + step * dir_b};
    const Params minus{params.a - step * dir_a, params.b - step * dir_b};
    require_hyperbolic(plus);
    require_hyperbolic(minus);
    return (pruning_value(f, w, plus) - pruning_value(f, w, minus)) / (2.0 * step);
  };
  FdResult out;
  out.value = central(h);
  out.half_step = central(0.5 * h);
  out.error_estimate = std::abs(out.value - out.half_step) * 4.0 / 3.0;
  return out;
}

}  // namespace lozi
