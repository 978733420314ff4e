#include "lozi/tent.hpp"

#include <cmath>
#include <string>

#include "lozi/error.hpp"

namespace lozi {

std::vector<double> tent_orbit(double a, double x0, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  double x = x0;
  for (int i = 0; i < n; ++i) {
    out.push_back(x);
    x = tent(a, x);
  }
  return out;
}

Kneading kneading(double a, int n, double tol) {
  if (!(a > 1.0 && a <= 2.0)) {
    throw Error(ErrorKind::InvalidArgument, "kneading needs 1 < a <= 2");
  }
  Kneading k;
  k.a = a;
  k.symbols.reserve(static_cast<std::size_t>(std::max(n, 0)));
  // Extended precision delays the loss of the sign pattern under expansion by a.
  long double x = 1.0L;
  const long double al = a;
  for (int i = 0; i < n; ++i) {
    if (std::fabs(x) <= tol) {
      k.boundary_hits.push_back(static_cast<std::size_t>(i));
      x = 0.0L;
    }
    k.orbit.push_back(static_cast<double>(x));
    k.symbols.push_back(x < 0.0L ? Symbol::Minus : Symbol::Plus);
    x = 1.0L - al * std::fabs(x);
  }
  return k;
}

std::vector<Symbols> Kneading::branches(std::size_t limit) const {
  std::vector<Symbols> out{symbols};
  for (std::size_t hit : boundary_hits) {
    const std::size_t existing = out.size();
    for (std::size_t j = 0; j < existing && out.size() < limit; ++j) {
      Symbols alt = out[j];
      alt[hit] = flip(alt[hit]);
      out.push_back(std::move(alt));
    }
  }
  return out;
}

double check_identity_sum(double a, SymbolSpan prefix, int n) {
  if (n < 0 || static_cast<std::size_t>(n) > prefix.size() + 1) {
    throw Error(ErrorKind::InsufficientWord, "identity sum needs n <= prefix length + 1");
  }
  double sum = 0.0;
  double term = 1.0;  // (-1)^i eps_0...eps_{i-1} / a^i
  for (int i = 0; i < n; ++i) {
    sum += term;
    if (i + 1 < n) term *= -static_cast<double>(value(prefix[static_cast<std::size_t>(i)])) / a;
  }
  return std::abs(sum);
}

double identity_sum_tail_bound(double a, int n) { return std::pow(a, -n) * a / (a - 1.0); }

double check_identity_shifted(double a, SymbolSpan prefix, int i, int n) {
  if (i < 0 || n < 0 || prefix.size() < static_cast<std::size_t>(i + n)) {
    throw Error(ErrorKind::InsufficientWord, "shifted identity needs i + n prefix symbols");
  }
  // P_k = eps_0 ... eps_{k-1} (empty product 1).
  double product = 1.0;
  for (int k = 0; k < i; ++k) product *= value(prefix[static_cast<std::size_t>(k)]);
  const double sign_i = (i % 2 == 0) ? 1.0 : -1.0;

  double t = 1.0;
  for (int k = 0; k < i; ++k) t = tent(a, t);
  const double rhs = sign_i * product / std::pow(a, i) * t;

  double lhs = 0.0;
  double prod = product;
  for (int j = 0; j < n; ++j) {
    prod *= value(prefix[static_cast<std::size_t>(i + j)]);
    const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
    lhs += sign * prod / std::pow(a, i + j + 1);
  }
  return std::abs(lhs - rhs);
}

double identity_shifted_tail_bound(double a, int i, int n) {
  return std::pow(a, -(i + n)) / (a - 1.0);
}

namespace {

struct LapCounter {
  long double a;
  int n;
  std::uint64_t limit;
  std::uint64_t pieces = 0;

  long double map(long double x) const { return 1.0L - a * std::fabs(x); }

  // [fl, fr] is the image of an affine piece of T^k; the piece splits where
  // the image crosses 0.
  void walk(long double fl, long double fr, int k) {
    if (k == n) {
      if (++pieces > limit) {
        throw Error(ErrorKind::BudgetExceeded,
                    "lap count exceeds " + std::to_string(limit) + " pieces");
      }
      return;
    }
    if ((fl < 0.0L && fr > 0.0L) || (fl > 0.0L && fr < 0.0L)) {
      walk(map(fl), 1.0L, k + 1);
      walk(1.0L, map(fr), k + 1);
    } else {
      walk(map(fl), map(fr), k + 1);
    }
  }
};

}  // namespace

std::uint64_t lap_number(double a, int n, std::uint64_t piece_limit) {
  if (!(a > 1.0 && a <= 2.0)) throw Error(ErrorKind::InvalidArgument, "lap_number needs 1 < a <= 2");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "lap_number needs n >= 0");
  LapCounter counter{a, n, piece_limit};
  counter.walk(1.0L - a, 1.0L, 0);
  return counter.pieces;
}

double tent_entropy_lap(double a, int n) {
  return std::log(static_cast<double>(lap_number(a, n))) / n;
}

double tent_entropy_lap_growth(double a, int n) {
  const int half = n / 2;
  return std::log(static_cast<double>(lap_number(a, n)) / static_cast<double>(lap_number(a, half))) /
         (n - half);
}

}  // namespace lozi
