#include <doctest.h>

#include <cmath>
#include <random>

#include "lozi/error.hpp"
#include "lozi/geometry.hpp"

using namespace lozi;

namespace {

double distance_to_polyline(const std::vector<PlanePoint>& v, PlanePoint q) {
  double best = INFINITY;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const PlanePoint d = v[i + 1] - v[i];
    const double t = std::clamp(dot(q - v[i], d) / dot(d, d), 0.0, 1.0);
    best = std::min(best, distance(q, v[i] + t * d));
  }
  return best;
}

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("the map and its inverse") {
  const Params p{1.0, 0.5};
  const PlanePoint q = lozi_apply(p, {2.0 / 3.0, 2.0 / 3.0});
  CHECK(q.x == doctest::Approx(2.0 / 3.0));
  CHECK(q.y == doctest::Approx(2.0 / 3.0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const PlanePoint x{u(rng), u(rng)};
    CHECK(distance(lozi_inverse(p, lozi_apply(p, x)), x) < 1e-12);
  }
  CHECK(error_of([] { (void)lozi_inverse({2.0, 0.0}, {0.1, 0.2}); }) == ErrorKind::NonInvertible);
}

TEST_CASE("orientation follows the sign of b") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (double b : {0.4, -0.4}) {
    const Params p{1.6, b};
    for (double side : {1.0, -1.0}) {
      const PlanePoint o{side * u(rng), u(rng)};
      const PlanePoint e1{o.x + side * 0.01, o.y};
      const PlanePoint e2{o.x, o.y + 0.01};
      const double before = cross(e1 - o, e2 - o);
      const PlanePoint lo = lozi_apply(p, o);
      const double after = cross(lozi_apply(p, e1) - lo, lozi_apply(p, e2) - lo);
      CHECK(after / before == doctest::Approx(lozi_jacobian_det(p)));
    }
  }
}

TEST_CASE("fixed and period-two points at (1, 0.5)") {
  const Params p{1.0, 0.5};
  const FixedData fd = fixed_data(p);
  REQUIRE(fd.p1);
  REQUIRE(fd.p2);
  REQUIRE(fd.n1);
  CHECK(distance(fd.p1->point, {2.0 / 3.0, 2.0 / 3.0}) < 1e-15);
  CHECK(distance(lozi_apply(p, fd.p1->point), fd.p1->point) <= 1e-12);
  CHECK(distance(lozi_apply(p, fd.p2->point), fd.p2->point) <= 1e-12);
  CHECK(distance(*fd.n1, {1.2, -0.4}) <= 1e-12);
  CHECK(distance(*fd.n2, {-0.4, 1.2}) <= 1e-12);
  CHECK(distance(lozi_apply_n(p, *fd.n1, 2), *fd.n1) <= 1e-12);
  CHECK(fd.full_structure());
  const double root = std::sqrt(1.0 + 2.0);
  CHECK(fd.p1->lambda_stable == doctest::Approx((-1.0 + root) / 2.0));
  CHECK(fd.p1->lambda_unstable == doctest::Approx((-1.0 - root) / 2.0));
  CHECK(fd.p2->lambda_unstable == doctest::Approx((1.0 + root) / 2.0));
  // (lambda, 1) is an eigenvector of the piece containing p1.
  const PlanePoint v = fd.p1->unstable_dir();
  const PlanePoint image = lozi_apply(p, fd.p1->point + 1e-3 * v) - fd.p1->point;
  CHECK(distance(image, (1e-3 * fd.p1->lambda_unstable) * v) < 1e-12);
}

TEST_CASE("below the line a = 1 - b only p1 exists") {
  const FixedData fd = fixed_data({0.3, 0.5});
  REQUIRE(fd.p1);
  CHECK(fd.p1->point.x == doctest::Approx(1.0 / 0.8));
  CHECK_FALSE(fd.p2);
  CHECK_FALSE(fd.n1);
  CHECK(error_of([] { (void)fixed_data({-1.5, -0.3}); }) == ErrorKind::NoFixedPoint);
}

TEST_CASE("L^8(Z) and the invariant polygon") {
  const Params p{1.0, 0.5};
  const PlanePoint z = unstable_axis_point(p);
  CHECK(z.x == doctest::Approx(1.0 + 1.0 / std::sqrt(3.0)));
  CHECK(z.y == 0.0);
  const PlanePoint l8 = lozi_apply_n(p, z, 8);
  CHECK(std::abs(l8.x - 1.223) < 1e-3);
  CHECK(std::abs(l8.y + 0.375) < 1e-3);
  const InvarianceReport rep = polygon_invariance(p);
  CHECK(rep.convex);
  CHECK(rep.invariant);
  CHECK(rep.margin > 0.0);
  CHECK(signed_distance_to_polygon(rep.corners, l8) > 0.0);
  const InvarianceReport near = polygon_invariance({1.02, 0.5});
  CHECK(near.invariant);
  CHECK(near.margin > 0.0);
  CHECK_FALSE(polygon_invariance({1.7, 0.5}).invariant);
}

TEST_CASE("Lyapunov decrease at (1, 0.5)") {
  const Params p{1.0, 0.5};
  CHECK(lyapunov_delta(p, {1.2, -0.4}) == doctest::Approx(0.0));
  CHECK(lyapunov_delta(p, unstable_axis_point(p)) < 0.0);
  const InvarianceReport rep = polygon_invariance(p);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ux(1.0, 1.6), uy(-0.6, 0.0);
  int n = 0;
  while (n < 1000) {
    const PlanePoint q{ux(rng), uy(rng)};
    if (signed_distance_to_polygon(rep.corners, q) <= 0.0) continue;
    ++n;
    const PlanePoint d = q - PlanePoint{1.2, -0.4};
    REQUIRE(std::abs(lyapunov_delta(p, q) + 15.0 / 16.0 * dot(d, d)) <= 1e-12);
  }
}

TEST_CASE("unstable manifolds") {
  const Params p{1.0, 0.5};
  const ManifoldResult right = unstable_manifold(p, UnstableSeed::P1Right, 40.0);
  const std::vector<PlanePoint>& v = right.polyline.vertices;
  REQUIRE(v.size() >= 3);
  CHECK(distance(v[1], unstable_axis_point(p)) < 1e-12);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] != v[i - 1]);
  // Converges to the period-two sink, so growth stops before the budget.
  CHECK_FALSE(right.budget_exceeded);
  CHECK(distance(v.back(), {1.2, -0.4}) < 1e-8);

  SUBCASE("invariance under L^2 up to the frontier") {
    const Params q{1.7, 0.5};
    const ManifoldResult m = unstable_manifold(q, UnstableSeed::P1Right, 30.0);
    CHECK(m.budget_exceeded);
    const std::vector<PlanePoint>& w = m.polyline.vertices;
    double arc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) arc += distance(w[i - 1], w[i]);
      if (arc > 5.0) break;
      CHECK(distance_to_polyline(w, lozi_apply_n(q, w[i], 2)) < 1e-9);
    }
  }
  SUBCASE("p2 half-line") {
    const ManifoldResult h = unstable_manifold(p, UnstableSeed::P2, 5.0);
    CHECK(h.polyline.kind == PolylineKind::UnstableLeftHalfline);
    CHECK(h.polyline.arc_length() == doctest::Approx(5.0));
    const PlanePoint far = h.polyline.vertices.back();
    CHECK(far.x < -2.0);
    const PlanePoint image = lozi_apply(p, far);
    CHECK(distance_to_polyline(unstable_manifold(p, UnstableSeed::P2, 50.0).polyline.vertices, image) < 1e-9);
  }
}

TEST_CASE("stable manifolds are invariant under L^{-1}") {
  const Params p{1.7, 0.5};
  const ManifoldResult g = stable_manifold(p, StableSide::Grown, 20.0);
  const std::vector<PlanePoint>& v = g.polyline.vertices;
  double arc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) arc += distance(v[i - 1], v[i]);
    if (arc > 3.0) break;
    CHECK(distance_to_polyline(v, lozi_inverse(p, v[i])) < 1e-9);
  }
  CHECK(error_of([] { (void)stable_manifold({1.7, 0.0}, StableSide::Grown, 5.0); }) == ErrorKind::NonInvertible);
}

TEST_CASE("homoclinic detection") {
  CHECK(homoclinic_intersects({1.0, 0.5}).kind == HomoclinicKind::NoWithinBudget);
  const HomoclinicResult yes = homoclinic_intersects({1.7, 0.5});
  REQUIRE(yes.kind == HomoclinicKind::Yes);
  CHECK(distance(yes.witness, fixed_data({1.7, 0.5}).p1->point) > 1e-6);
  for (double b : {0.05, 0.1, 0.3}) CHECK(homoclinic_intersects({2.0, b}).kind == HomoclinicKind::Yes);
  CHECK(error_of([] { (void)homoclinic_intersects({2.0, 0.0}); }) == ErrorKind::NonInvertible);
}

TEST_CASE("zero-entropy classifier") {
  CHECK(classify_zero_entropy({1.0, 0.5}).kind == ZeroEntropyKind::NumericZero);
  const ZeroEntropyVerdict ii = classify_zero_entropy({0.2, 0.5});
  CHECK(ii.kind == ZeroEntropyKind::AnalyticZero);
  CHECK(ii.analytic_case == 2);
  CHECK(describe(ii) == "AnalyticZero(ii)");
  CHECK(classify_zero_entropy({1.7, 0.5}).kind == ZeroEntropyKind::Homoclinic);
  CHECK(analytic_zero_case({-2.0, -0.5}) == 1);
  CHECK(analytic_zero_case({0.5, 0.5}) == 3);
  CHECK(analytic_zero_case({1.0, 0.5}) == 0);
}

TEST_CASE("zero-entropy scan") {
  const ZeroScan scan = scan_zero_entropy({0.0, 2.5}, {0.0, 1.0}, {25, 10});
  CHECK(scan.a_values.front() == doctest::Approx(0.1));
  CHECK(scan.a_values.back() == doctest::Approx(2.5));
  for (int j = 0; j < scan.height; ++j) {
    for (int i = 0; i < scan.width; ++i) {
      const double a = scan.a_values[i];
      const double b = scan.b_values[j];
      const ZeroEntropyKind k = scan.at(i, j).kind;
      if (a < 1.0 - b) CHECK(k == ZeroEntropyKind::AnalyticZero);
      if (a >= 2.0) CHECK(k == ZeroEntropyKind::Homoclinic);
      if (k == ZeroEntropyKind::AnalyticZero) CHECK(analytic_zero_case({a, b}) != 0);
    }
  }
}

TEST_CASE("period-four segment on a = 1 + b") {
  const Period4Segment s = period4_segment(0.5);
  CHECK(s.intercept == doctest::Approx(0.4));
  CHECK(period4_residual(s, 201) <= 1e-10);
  for (double x : {s.x_min - 0.3, s.x_max + 0.2}) {
    const PlanePoint q = s.point_at(x);
    CHECK_FALSE(s.satisfies_constraints(q));
    CHECK(distance(lozi_apply_n({1.5, 0.5}, q, 4), q) > 1e-6);
  }
  CHECK(error_of([] { (void)period4_segment(Params{1.7, 0.5}); }) == ErrorKind::WrongParams);
}
