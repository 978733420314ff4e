#pragma once

#include <cstdint>
#include <vector>

#include "lozi/symbolic.hpp"

namespace lozi {

/// T_a(x) = 1 - a|x|.
constexpr double tent(double a, double x) noexcept { return 1.0 - a * (x < 0.0 ? -x : x); }

/// x0, T(x0), ..., T^{n-1}(x0).
std::vector<double> tent_orbit(double a, double x0, int n);

/// Itinerary of the critical value 1 under T_a.
struct Kneading {
  double a = 0.0;
  Symbols symbols;                        ///< eps_0, eps_1, ...
  std::vector<std::size_t> boundary_hits;  ///< i with |T^i(1)| <= tol
  std::vector<double> orbit;              ///< T^i(1) as iterated (hits snapped to 0)

  /// Every itinerary in i_a(1) truncated to the prefix length, branching at
  /// each boundary hit. At most `limit` branches are produced.
  std::vector<Symbols> branches(std::size_t limit = 64) const;
};

inline constexpr double kDefaultBoundaryTol = 1e-12;

/// First n symbols of kappa(a) for 1 < a <= 2. Orbit points within tol of 0 are
/// recorded as boundary hits, stored as +1 and snapped to 0 so the orbit
/// restarts exactly at T(0) = 1.
Kneading kneading(double a, int n, double tol = kDefaultBoundaryTol);

/// |sum_{i<n} (-1)^i eps_0...eps_{i-1} / a^i| for a kneading prefix; tends to 0.
double check_identity_sum(double a, SymbolSpan kneading_prefix, int n);
/// sum_{i>=n} a^{-i} = a^{-n} a / (a - 1), the bound on check_identity_sum.
double identity_sum_tail_bound(double a, int n);

/// |sum_{j<n} (-1)^{i+j} eps_0...eps_{i+j} / a^{i+j+1}
///    - (-1)^i eps_0...eps_{i-1} / a^i * T^i(1)|.
/// The prefix must hold at least i + n symbols.
double check_identity_shifted(double a, SymbolSpan kneading_prefix, int i, int n);
/// sum_{j>=n} a^{-(i+j+1)}, the bound on check_identity_shifted.
double identity_shifted_tail_bound(double a, int i, int n);

/// Number of monotone pieces of T_a^n on the core [1 - a, 1]. Turning points
/// are found in closed form on each affine piece. Throws BudgetExceeded past
/// `piece_limit` pieces.
std::uint64_t lap_number(double a, int n, std::uint64_t piece_limit = std::uint64_t{1} << 34);

/// log(lap(T_a^n)) / n.
double tent_entropy_lap(double a, int n);

/// log(lap(n) / lap(n/2)) / (n - n/2): cancels the constant prefactor of the
/// lap count and converges much faster than tent_entropy_lap.
double tent_entropy_lap_growth(double a, int n);

}  // namespace lozi
