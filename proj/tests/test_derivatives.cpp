#include <doctest.h>

#include <cmath>

#include "lozi/derivatives.hpp"
#include "lozi/error.hpp"
#include "lozi/pruning.hpp"
#include "lozi/tent.hpp"

using namespace lozi;

namespace {

Symbols special_head(std::size_t n) {
  Symbols h(n, Symbol::Minus);
  h[0] = Symbol::Plus;
  return h;
}

double closed_form_db(double a) {
  const double h = 1e-6;
  return (closed_form_q({a, h}) - closed_form_q({a, -h})) / (2.0 * h);
}

}  // namespace

TEST_CASE("bound intervals at a = 2") {
  const DerivBounds da = a_derivative_bounds(2.0);
  CHECK(da.lo == doctest::Approx(0.75));
  CHECK(da.hi == doctest::Approx(1.0));
  const DerivBounds plus = b_derivative_bounds(2.0, Symbol::Plus);
  CHECK(plus.lo == doctest::Approx(0.25));
  CHECK(plus.hi == doctest::Approx(0.625));
  const DerivBounds minus = b_derivative_bounds(2.0, Symbol::Minus);
  CHECK(minus.lo == doctest::Approx(-0.75));
  CHECK(minus.hi == doctest::Approx(-0.375));
}

TEST_CASE("dq/db at b = 0 matches the closed form's finite difference") {
  for (double a : {1.3, 1.5, 1.7, 2.0}) CHECK(dq_db_at_b0(a) == doctest::Approx(closed_form_db(a)).epsilon(1e-6));
  CHECK(dq_db_at_b0(1.5) == doctest::Approx(-8.0 / 9.0).epsilon(1e-12));
  CHECK(dq_db_at_b0(2.0) == doctest::Approx(0.0));
  // On kappa(2) = (+1,-1,-1,...) the closed-form value is inside the q bounds.
  CHECK(q_b_derivative_bounds(2.0).contains(dq_db_at_b0(2.0)));
}

TEST_CASE("dp/db at b = 0 is 1 / (a eps_{-2})") {
  for (const char* text : {"+-+--·+-", "-+-++·+-"}) {
    Word w = Word::parse(text);
    w.head = special_head(40);
    for (double a : {1.5, 2.0}) {
      const FdResult fd = fd_derivative(PruningFunction::P, w, {a, 0.0}, 0.0, 1.0);
      CHECK(fd.value == doctest::Approx(dp_db_at_b0(w, a)).epsilon(1e-6));
      CHECK(fd.error_estimate < 1e-6);
    }
  }
}

TEST_CASE("finite differences of p - q respect the bound lemmas on kappa(a) heads") {
  for (double a : {1.4, 1.6, 1.8, 2.0}) {
    const Symbols head = kneading(a, 60).symbols;
    for (std::uint64_t t = 0; t < 256; ++t) {
      const Word w{symbols_from_bits(t, 8), head};
      const double fa = fd_derivative(PruningFunction::PMinusQ, w, {a, 0.0}, 1.0, 0.0).value;
      const double fb = fd_derivative(PruningFunction::PMinusQ, w, {a, 0.0}, 0.0, 1.0).value;
      CHECK(a_derivative_bounds(a).contains(fa, 1e-3));
      CHECK(b_derivative_bounds(a, w.at(-2)).contains(fb, 1e-3));
    }
  }
}

TEST_CASE("monotone cones") {
  SUBCASE("directions make the derivative lower bound positive") {
    for (double a : {1.4, 1.7, 2.0}) {
      const MonotoneCone c = monotone_cone(a);
      CHECK(c.n1 > 0.0);
      CHECK(c.n2 > 0.0);
      const DerivBounds da = a_derivative_bounds(a);
      for (Symbol e : {Symbol::Plus, Symbol::Minus}) {
        const DerivBounds db = b_derivative_bounds(a, e);
        CHECK(c.n1 * da.lo - db.hi >= kDefaultConeMargin * 0.999);
        CHECK(c.n2 * da.lo + db.lo >= kDefaultConeMargin * 0.999);
      }
    }
  }
  SUBCASE("degenerate near a = 1") {
    try {
      (void)monotone_cone(1.2);
      FAIL("expected DegenerateBounds");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateBounds);
    }
  }
}

TEST_CASE("finite differences refuse non-hyperbolic stencils") {
  try {
    (void)fd_derivative(PruningFunction::Q, Word{{}, special_head(20)}, {1.0 + 1e-7, 0.0}, 0.0, 1.0);
    FAIL("expected NotHyperbolic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHyperbolic);
  }
}
