#include <doctest.h>

#include <cmath>

#include "lozi/error.hpp"
#include "lozi/pruning.hpp"
#include "lozi/tent.hpp"

using namespace lozi;

namespace {

// Monotone pieces of T_a^n on the core, counted from a fine sample grid.
std::uint64_t sampled_laps(double a, int n, int samples) {
  std::uint64_t laps = 1;
  int direction = 0;
  double prev = 0.0;
  for (int i = 0; i <= samples; ++i) {
    double x = (1.0 - a) + a * static_cast<double>(i) / samples;
    for (int k = 0; k < n; ++k) x = tent(a, x);
    if (i > 0) {
      const int d = x > prev ? 1 : (x < prev ? -1 : 0);
      if (d != 0 && direction != 0 && d != direction) ++laps;
      if (d != 0) direction = d;
    }
    prev = x;
  }
  return laps;
}

}  // namespace

TEST_CASE("kneading sequence of the full tent") {
  const Kneading k = kneading(2.0, 12);
  CHECK(to_string(k.symbols) == "+-----------");
  CHECK(k.boundary_hits.empty());
}

TEST_CASE("boundary hits branch the itinerary") {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;  // T^2(1) = 0
  const Kneading k = kneading(golden, 8);
  REQUIRE(k.boundary_hits.size() >= 1);
  CHECK(k.boundary_hits.front() == 2);
  CHECK(k.branches().size() >= 2);
}

TEST_CASE("kneading identities stay within their tail bounds") {
  for (double a : {1.2, 1.45, 1.7, 1.9, 2.0}) {
    const Symbols pre = kneading(a, 50).symbols;
    CHECK(check_identity_sum(a, pre, 40) <= identity_sum_tail_bound(a, 40) + 1e-12);
    for (int i = 0; i <= 5; ++i) {
      CHECK(check_identity_shifted(a, pre, i, 40) <= identity_shifted_tail_bound(a, i, 40) + 1e-12);
    }
  }
}

TEST_CASE("lap numbers agree with a sampled count") {
  CHECK(lap_number(2.0, 10) == 1024);
  for (double a : {1.3, 1.7, 1.9}) {
    for (int n : {3, 6, 8}) CHECK(lap_number(a, n) == sampled_laps(a, n, 400000));
  }
}

TEST_CASE("lap growth approaches log a") {
  CHECK(tent_entropy_lap(2.0, 16) == doctest::Approx(std::log(2.0)));
  CHECK(std::abs(tent_entropy_lap_growth(1.7, 16) - std::log(1.7)) < 0.01);
  CHECK(std::abs(tent_entropy_lap_growth(1.2, 24) - std::log(1.2)) < 0.05);
  CHECK(std::abs(tent_entropy_lap_growth(1.2, 40) - std::log(1.2)) < 0.01);
}

TEST_CASE("lap counting respects its budget") {
  try {
    (void)lap_number(2.0, 20, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("the kneading prefix meets the b = 0 pruning front") {
  // At b = 0, p = 1 and the front q = 1 is attained on kappa(a).
  for (double a : {1.3, 1.5, 1.7, 2.0}) {
    double width = INFINITY;
    for (int n : {4, 8, 12}) {
      const Interval q = q_interval(kneading(a, n).symbols, 40, {a, 0.0});
      CHECK(q.lo <= 1.0);
      CHECK(1.0 <= q.hi);
      CHECK(q.hi - q.lo < width);
      width = q.hi - q.lo;
    }
  }
}
