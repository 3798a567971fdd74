#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cohom/analytic/laurent_series.hpp"
#include "cohom/analytic/scalar_function.hpp"
#include "cohom/analytic/taylor_series.hpp"
#include "cohom/errors.hpp"
#include "oracles.hpp"

using namespace cohom;
using F = ScalarFunction;

namespace {

F random_function(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-2, 2), r(0.2, 2.5);
  std::uniform_int_distribution<int> p(0, 2);
  F f = F::constant(c(rng));
  f = f + F::monomial(c(rng), 1 + p(rng));
  f = f + compose_affine(F::sin(1, r(rng)), 1, 0) * c(rng);
  f = f + F::cos(c(rng), r(rng));
  f = f + F::exp(c(rng), 0.5 * c(rng));
  // a t^p sin term exercises the product rule
  f = f + F(std::vector<Term>{{c(rng), 1 + p(rng), Kind::Sin, r(rng)}});
  return f;
}

void expect_coeffs(const TaylorSeries& s, const std::vector<double>& want, double tol = 1e-12) {
  ASSERT_GE(s.coeffs().size(), want.size());
  for (size_t k = 0; k < want.size(); ++k) EXPECT_NEAR(s[k], want[k], tol) << "order " << k;
}

}  // namespace

TEST(Differentiate, SinIsCos) { EXPECT_EQ(differentiate(F::sin(1, 1)), F::cos(1, 1)); }

TEST(Differentiate, HyperbolicPair) {
  const F f = F::exp(2, 1) - F::exp(2, -1);
  EXPECT_EQ(differentiate(f), F::exp(2, 1) + F::exp(2, -1));
}

TEST(Differentiate, ProductRule) {
  const F f(std::vector<Term>{{1, 2, Kind::Cos, 3}});
  const F want(std::vector<Term>{{2, 1, Kind::Cos, 3}, {-3, 2, Kind::Sin, 3}});
  EXPECT_EQ(differentiate(f), want);
}

TEST(Differentiate, MatchesCenteredDifferences) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> tdist(-1.5, 1.5);
  for (int i = 0; i < 50; ++i) {
    const F f = random_function(rng);
    const double t = tdist(rng), h = 1e-5;
    const double fd = (f(t + h) - f(t - h)) / (2 * h);
    const double fpp = evaluate(differentiate(f, 2), t);
    EXPECT_LE(std::abs(evaluate(differentiate(f), t) - fd), 1e-7 * (1 + std::abs(fpp))) << to_string(f);
  }
}

TEST(Differentiate, Linear) {
  std::mt19937_64 rng(8);
  const F f = random_function(rng), g = random_function(rng);
  const F lhs = differentiate(2.5 * f + g), rhs = 2.5 * differentiate(f) + differentiate(g);
  for (double t : {-0.7, 0.1, 1.3}) EXPECT_NEAR(lhs(t), rhs(t), 1e-12);
}

TEST(Evaluate, Examples) {
  EXPECT_NEAR(evaluate(F::sin(1, 1), std::numbers::pi / 2), 1, 1e-15);
  EXPECT_EQ(evaluate(F::exp(2, 1) - F::exp(2, -1), 0), 0);
  const F f(std::vector<Term>{{1, 2, Kind::Exp, 2}});
  EXPECT_NEAR(evaluate(f, 1), std::exp(2.0), 1e-14);
}

TEST(NormalForm, OneTermsCarryRateZeroAndZerosArePruned) {
  const F f(std::vector<Term>{{2, 0, Kind::One, 5}, {1, 0, Kind::Sin, 1}, {-1, 0, Kind::Sin, 1}});
  ASSERT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(f.terms()[0].rate, 0);
}

TEST(NormalForm, Idempotent) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const F f = random_function(rng);
    EXPECT_EQ(normalize(f.terms()), f.terms());
  }
}

TEST(NormalForm, SortedWithoutDuplicates) {
  std::mt19937_64 rng(10);
  const F f = random_function(rng) + random_function(rng);
  for (size_t i = 1; i < f.terms().size(); ++i) {
    const Term& a = f.terms()[i - 1];
    const Term& b = f.terms()[i];
    EXPECT_TRUE(std::tie(a.kind, a.rate, a.power) < std::tie(b.kind, b.rate, b.power));
  }
}

TEST(Grammar, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const F f = random_function(rng);
    const F g = parse_function(to_string(f));
    for (double t : {-1.0, 0.3, 1.7}) EXPECT_NEAR(f(t), g(t), 1e-12 * (1 + std::abs(f(t))));
  }
  EXPECT_EQ(parse_function("4sin(1t)"), F::sin(4, 1));
  EXPECT_EQ(parse_function("2exp(1t) - 2exp(-1t)"), F::sinh(4, 1));
}

TEST(Grammar, RejectsGarbage) {
  EXPECT_THROW(parse_function("4tan(1t)"), ParseError);
  EXPECT_THROW(parse_function("sin("), ParseError);
}

TEST(Taylor, Examples) {
  expect_coeffs(taylor_at(F::sin(1, 1), 0, 4), {0, 1, 0, -1.0 / 6, 0});
  expect_coeffs(taylor_at(F::exp(1, 2), 0, 2), {1, 2, 2});
  const TaylorSeries s = taylor_at(F::sin(2, 1), 0, 4);
  expect_coeffs(s * s, {0, 0, 4, 0, -4.0 / 3});
}

TEST(Taylor, TruncationErrorHasTheRightOrder) {
  std::mt19937_64 rng(12);
  const int n = 5;
  for (int i = 0; i < 10; ++i) {
    const F f = random_function(rng);
    const double t0 = 0.4;
    const TaylorSeries s = taylor_at(f, t0, n);
    const double h = 0.1;
    const double e1 = std::abs(f(t0 + h) - s.eval(h));
    const double e2 = std::abs(f(t0 + h / 2) - s.eval(h / 2));
    if (e1 < 1e-12) continue;
    // halving h divides the error by about 2^(n+1)
    EXPECT_GT(e1 / e2, std::pow(2.0, n + 1) / 2) << to_string(f);
  }
}

TEST(Taylor, RingLaws) {
  std::mt19937_64 rng(13);
  const TaylorSeries a = taylor_at(random_function(rng), 0.3, 8);
  const TaylorSeries b = taylor_at(random_function(rng), 0.3, 8);
  const TaylorSeries c = taylor_at(random_function(rng), 0.3, 8);
  // round-off is relative to the largest coefficient that entered the products
  double big = 1;
  for (const auto* s : {&a, &b, &c})
    for (double x : s->coeffs()) big = std::max(big, std::abs(x));
  const auto close = [&](const TaylorSeries& x, const TaylorSeries& y) {
    for (int k = 0; k <= x.order(); ++k) EXPECT_NEAR(x[k], y[k], 1e-13 * big * big * big);
  };
  close((a * b) * c, a * (b * c));
  close(a * (b + c), a * b + a * c);
  close(a * b, b * a);
  // division back-substitutes, so errors grow like (max|b_k| / |b_0|)^k
  const TaylorSeries q = (a * b) / b;
  double rho = 1;
  for (double x : b.coeffs()) rho = std::max(rho, std::abs(x / b[0]));
  for (int k = 0; k <= a.order(); ++k)
    EXPECT_NEAR(q[k], a[k], std::numeric_limits<double>::epsilon() * big * big * std::pow(rho, k));
}

TEST(Taylor, ExpTimesExpInverseIsOne) {
  expect_coeffs(taylor_at(F::exp(1, 1), 0, 6) * taylor_at(F::exp(1, -1), 0, 6), {1, 0, 0, 0, 0, 0, 0}, 1e-15);
}

TEST(Taylor, SinOverT) {
  const TaylorSeries s = taylor_at(F::sin(1, 1), 0, 7).shift_down(1);
  const TaylorSeries t = taylor_at(F::monomial(1, 1), 0, 7).shift_down(1);
  expect_coeffs(s / t, {1, 0, -1.0 / 6, 0, 1.0 / 120});
}

TEST(Taylor, DivisionByVanishingLeadingCoefficient) {
  EXPECT_THROW(taylor_at(F::constant(1), 0, 4) / taylor_at(F::sin(1, 1), 0, 4), DivisionByZeroSeries);
}

TEST(Laurent, OneOverSin) {
  const LaurentSeries s(taylor_at(F::sin(1, 1), 0, 10));
  const LaurentSeries q = 1.0 / s;
  EXPECT_EQ(q.low(), -1);
  EXPECT_NEAR(q.at(-1), 1, 1e-14);
  EXPECT_NEAR(q.at(0), 0, 1e-14);
  EXPECT_NEAR(q.at(1), 1.0 / 6, 1e-14);
  EXPECT_NEAR(q.at(3), 7.0 / 360, 1e-13);
}
