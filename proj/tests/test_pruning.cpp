#include <doctest.h>

#include <cmath>
#include <random>

#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/pruning.hpp"

using namespace lozi;

namespace {

Symbols special_head(std::size_t n) {
  Symbols h(n, Symbol::Minus);
  h[0] = Symbol::Plus;
  return h;
}

// q on (+1,-1,-1,...) from the constant tail r = 1/(-a + b r) of the r_n:
// q = r_0 (1 - r + r^2 - ...) = r_0 / (1 + r).
double q_special_oracle(double a, double b) {
  const double r = b == 0.0 ? -1.0 / a : (a - std::sqrt(a * a + 4.0 * b)) / (2.0 * b);
  const double r0 = 1.0 / (a + b * r);
  return r0 / (1.0 + r);
}

bool inside(const Interval& inner, const Interval& outer, double tol = 1e-12) {
  return outer.lo - tol <= inner.lo && inner.hi <= outer.hi + tol;
}

}  // namespace

TEST_CASE("continued-fraction radius is the fixed point of B = 1/(a - |b| B)") {
  for (const Params p : {Params{2.0, 0.3}, Params{1.4, -0.3}, Params{3.0, 0.99}}) {
    const double B = continued_fraction_bound(p);
    CHECK(B == doctest::Approx(1.0 / (p.a - std::abs(p.b) * B)).epsilon(1e-14));
    CHECK(p_series_ratio(p) < 1.0);
  }
}

TEST_CASE("closed form of q matches an independent fixed-point oracle") {
  CHECK(closed_form_q({2.0, 0.0}) == doctest::Approx(1.0));
  CHECK(closed_form_q({1.5, 0.0}) == doctest::Approx(2.0));
  for (double b : {-0.6, -0.2, 0.1, 0.4, 0.8}) {
    for (double a : {1.0 + std::abs(b) + 0.1, 2.2, 3.0}) {
      CHECK(closed_form_q({a, b}) == doctest::Approx(q_special_oracle(a, b)).epsilon(1e-12));
    }
  }
  try {
    (void)closed_form_q(parse_symbols("+-+"), {2.0, 0.1});
    FAIL("expected WrongHead");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongHead);
  }
}

TEST_CASE("strict evaluators enclose the deep value") {
  const Params p{1.8, 0.3};
  const Word w{{}, special_head(121)};
  const double deep = eval_q(w, 120, p).value;
  for (int depth : {5, 10, 20, 40}) {
    const BoundedValue q = eval_q(w, depth, p);
    CHECK(std::abs(q.value - deep) <= q.err);
  }
  CHECK(eval_q(w, 60, p).value == doctest::Approx(closed_form_q(p)).epsilon(1e-12));
}

TEST_CASE("deeper enclosures nest inside shallower ones") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ub(-0.9, 0.9);
  std::uniform_real_distribution<double> ua(0.05, 1.5);
  std::uniform_int_distribution<int> ud(1, 12);
  for (int trial = 0; trial < 10000; ++trial) {
    const double b = ub(rng);
    const Params p{1.0 + std::abs(b) + ua(rng), b};
    const int depth = ud(rng);
    const Symbols tail = symbols_from_bits(rng(), 40);
    const Symbols head = symbols_from_bits(rng(), 40);
    REQUIRE(inside(q_interval(head, 3 * depth, p), q_interval(head, depth, p)));
    REQUIRE(inside(p_interval(tail, 3 * depth, p), p_interval(tail, depth, p)));
  }
}

TEST_CASE("shorter words give wider enclosures") {
  const Params p{1.7, 0.5};
  const Symbols head = parse_symbols("+--+-+--+-+-");
  for (std::size_t n = 0; n < head.size(); ++n) {
    const SymbolSpan full(head);
    CHECK(inside(q_interval(full.first(n + 1), 20, p), q_interval(full.first(n), 20, p)));
  }
}

TEST_CASE("strict evaluators reject short words and non-hyperbolic parameters") {
  try {
    (void)eval_q(Word{{}, special_head(5)}, 10, {2.0, 0.1});
    FAIL("expected InsufficientWord");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientWord);
  }
  try {
    (void)eval_q(Word{{}, special_head(50)}, 10, {1.5, 0.6});
    FAIL("expected NotHyperbolic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHyperbolic);
  }
}

TEST_CASE("the (2,0) pruning front is extremal") {
  const Raster r = pruned_region_raster({2.0, 0.0}, 7, 30);
  CHECK(r.count(Verdict::CertifiedPruned) == 0);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Word w{symbols_from_bits(rng(), 40), symbols_from_bits(rng(), 40)};
    CHECK(eval_pq_cylinder(w, 38, {2.0, 0.0}).hi >= 0.0);
  }
}

TEST_CASE("Fig. 3 and Fig. 4 panels have pruned cells away from (2,0)") {
  CHECK(pruned_region_raster({1.7, 0.5}, 7, 30).count(Verdict::CertifiedPruned) > 0);
  CHECK(pruned_region_raster({1.95, 0.0}, 7, 30).count(Verdict::CertifiedPruned) > 0);
  CHECK(pruned_region_raster({2.0, 0.1}, 7, 30).count(Verdict::CertifiedPruned) > 0);
}

TEST_CASE("raster cells agree with direct classification for both signs of b") {
  for (const Params p : {Params{1.8, 0.3}, Params{1.8, -0.3}}) {
    const Raster r = pruned_region_raster(p, 5, 25);
    for (int y = 0; y < r.height; ++y) {
      for (int x = 0; x < r.width; ++x) {
        const Word w{tail_from_index(y, 5, p.b_sign()), head_from_index(x, 5)};
        REQUIRE(r.at(x, y) == classify_cylinder(w, 25, 0, p));
      }
    }
  }
}

TEST_CASE("certified verdicts agree with the cylinder enclosure") {
  const Params p{1.7, 0.5};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Word w{symbols_from_bits(rng(), 10), symbols_from_bits(rng(), 10)};
    const Interval iv = eval_pq_cylinder(w, 25, p);
    const Verdict v = classify_cylinder(w, 25, 2, p);
    if (v == Verdict::CertifiedPruned) CHECK(iv.hi < 0.0);
    if (v == Verdict::CertifiedAdmissibleWindow) CHECK(iv.lo >= 0.0);
  }
}

TEST_CASE("itineraries of bounded orbits are never pruned") {
  for (const Params p : {Params{1.7, 0.5}, Params{2.0, 0.1}}) {
    PlanePoint x{0.05, 0.02};
    for (int i = 0; i < 500; ++i) x = lozi_apply(p, x);
    Symbols it;
    for (int i = 0; i < 400; ++i) {
      it.push_back(symbol_of_sign(x.x));
      x = lozi_apply(p, x);
    }
    for (int t = 12; t + 12 <= 400; ++t) {
      const Word w{Symbols(it.begin() + t - 12, it.begin() + t), Symbols(it.begin() + t, it.begin() + t + 12)};
      REQUIRE(classify_cylinder(w, 30, 0, p) != Verdict::CertifiedPruned);
    }
  }
}

TEST_CASE("admissible counts") {
  SUBCASE("full shift at a >= 2, small b") {
    const WordCount c = admissible_word_count({2.05, 0.05}, 10, 30);
    CHECK(c.upper == 1024);
    CHECK(c.lower == 1024);
  }
  SUBCASE("alphabet bound") { CHECK(admissible_word_count({1.7, 0.5}, 1, 20).upper <= 2); }
  SUBCASE("submultiplicative and ordered") {
    const std::vector<WordCount> c = admissible_word_counts({1.7, 0.5}, 12, 25);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t m = 1; n + m <= 12; ++m) {
        CHECK(c[n + m - 1].upper <= c[n - 1].upper * c[m - 1].upper);
      }
    }
    for (const WordCount& w : c) CHECK(w.lower <= w.upper);
  }
  SUBCASE("more depth never adds blocks") {
    for (int n : {8, 11}) {
      CHECK(admissible_word_count({1.7, 0.5}, n, 30).upper <= admissible_word_count({1.7, 0.5}, n, 8).upper);
    }
  }
  SUBCASE("budget") {
    CountOptions opt;
    opt.node_limit = 100;
    try {
      (void)admissible_word_count({2.05, 0.05}, 12, 20, opt);
      FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
  }
}

TEST_CASE("entropy bracket at the full shift and on the tent line") {
  const EntropyBracket full = entropy_estimate({2.1, 0.05}, 12, 30);
  CHECK(full.h_lower == doctest::Approx(std::log(2.0)));
  CHECK(full.h_upper == doctest::Approx(std::log(2.0)));
  const EntropyBracket tent = entropy_estimate({1.7, 0.0}, 14, 30);
  CHECK(tent.h_lower <= tent.h_upper);
  CHECK(tent.h_lower - 0.05 <= std::log(1.7));
  CHECK(std::log(1.7) <= tent.h_upper + 0.05);
}
