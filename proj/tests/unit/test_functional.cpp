#include <doctest.h>

#include <cmath>

#include "bsvy/error.hpp"
#include "bsvy/functional.hpp"

using namespace bsvy;

namespace {
FunctionalConfig cfg(int k, double p, double q, double gamma) {
  FunctionalConfig c;
  c.k = k;
  c.q = q;
  c.gamma = gamma;
  c.space = Lebesgue{p};
  return c;
}
}  // namespace

TEST_CASE("admissible gamma range") {
  CHECK(gamma_valid(1.0, 2.0, 1.0));
  CHECK(gamma_valid(1.0, 2.0, -3.0));
  CHECK_FALSE(gamma_valid(1.0, 2.0, -2.0));
  CHECK_FALSE(gamma_valid(1.0, 2.0, -1.0));
  CHECK(gamma_valid(2.0, 2.0, -1.0));
  CHECK_FALSE(gamma_valid(2.0, 2.0, 0.0));
}

TEST_CASE("config validation") {
  auto c = cfg(1, 2.0, 2.0, 0.0);
  CHECK_THROWS_AS(c.validate(1), InvalidParameter);
  c = cfg(0, 2.0, 2.0, 1.0);
  CHECK_THROWS_AS(c.validate(1), InvalidParameter);
  c = cfg(1, 2.0, 2.0, 1.0);
  c.lambdas.min = 10.0;
  c.lambdas.max = 1.0;
  CHECK_THROWS_AS(c.validate(1), InvalidParameter);
}

TEST_CASE("inner integral of a linear function is 2 / lambda") {
  // |h| > lambda h^2 on |h| < 1 / lambda, measure dh
  const auto f = make_polynomial(1, {MultiIndex{{1, 0, 0}}}, {1.0});
  auto c = cfg(1, 2.0, 1.0, 1.0);
  c.hquad.r_max = 100.0;
  for (double lam : {0.1, 1.0, 7.0}) CHECK(inner_integral(f, Point{0.4}, lam, c) == doctest::Approx(2.0 / lam).epsilon(1e-9));
}

TEST_CASE("functional vanishes on P_{k-1}") {
  const auto lin = make_polynomial(1, {MultiIndex{{1, 0, 0}}, MultiIndex{}}, {1.0, 2.0});
  const auto s = bsvy_sup(lin, cfg(2, 2.0, 2.0, 1.0));
  CHECK(s.sup == 0.0);
}

TEST_CASE("dilation covariance of the functional") {
  const auto f = make_gaussian_bump(1, 1.0);
  const auto c = cfg(1, 2.0, 2.0, 1.0);
  const double a = 2.0, lam = 0.7;
  const double lhs = bsvy_value(f.dilated(a), lam, c);
  const double rhs = std::pow(a, 1.0 - 0.5) * bsvy_value(f, lam * std::pow(a, -1.0 - 0.5), c);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-4));
}

TEST_CASE("limit matches the symbol prediction in 1D") {
  const auto f = make_gaussian_bump(1, 1.0);
  for (double gamma : {1.0, -2.0}) {
    const LimitResult r = bsvy_limit(f, cfg(1, 2.0, 2.0, gamma));
    CHECK(r.rel_error < 0.05);
    CHECK(r.monotone);
  }
}

TEST_CASE("sup of a gaussian is finite with a flat tail") {
  const auto s = bsvy_sup(make_gaussian_bump(1, 1.0), cfg(1, 2.0, 2.0, 1.0));
  CHECK(std::isfinite(s.sup));
  CHECK(s.ratio > 1.0);
  CHECK(s.ratio < 2.0);
}

TEST_CASE("thread count does not change values") {
  const auto f = make_gaussian_bump(1, 1.0);
  auto c = cfg(1, 2.0, 2.0, 1.0);
  c.threads = 1;
  const auto a = bsvy_curve(f, {0.1, 1.0, 10.0}, c);
  c.threads = 4;
  const auto b = bsvy_curve(f, {0.1, 1.0, 10.0}, c);
  CHECK(a == b);
}
