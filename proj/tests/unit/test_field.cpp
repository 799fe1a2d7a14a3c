#include <doctest.h>

#include <cmath>

#include "bsvy/error.hpp"
#include "bsvy/field.hpp"

using namespace bsvy;

TEST_CASE("gaussian derivatives match central differences") {
  const auto f = make_gaussian_bump(2, 0.8, MultiIndex{{1, 0, 0}});
  const Point x{0.3, -0.4};
  const double h = 1e-5;
  const double fd = (f(Point{x[0] + h, x[1]}) - f(Point{x[0] - h, x[1]})) / (2 * h);
  CHECK(f.derivative(x, MultiIndex{{1, 0, 0}}) == doctest::Approx(fd).epsilon(1e-8));
  const double fd2 = (f(Point{x[0], x[1] + h}) - 2 * f(x) + f(Point{x[0], x[1] - h})) / (h * h);
  CHECK(f.derivative(x, MultiIndex{{0, 2, 0}}) == doctest::Approx(fd2).epsilon(1e-4));
}

TEST_CASE("dilation composes and scales derivatives") {
  const auto f = make_gaussian_bump(1, 1.0);
  const auto g = f.dilated(2.0).dilated(1.5);
  const Point x{0.2};
  CHECK(g(x) == doctest::Approx(f(Point{0.6})));
  CHECK(g.derivative(x, MultiIndex{{1, 0, 0}}) == doctest::Approx(3.0 * f.derivative(Point{0.6}, MultiIndex{{1, 0, 0}})));
  CHECK_THROWS_AS(f.dilated(0.0), InvalidParameter);
}

TEST_CASE("polynomial degree detection") {
  const auto p = make_polynomial(2, {MultiIndex{{1, 1, 0}}, MultiIndex{{0, 0, 0}}}, {2.0, 1.0});
  CHECK(p.polynomial_degree() == 2);
  CHECK(p.is_polynomial_of_degree_at_most(2));
  CHECK_FALSE(p.is_polynomial_of_degree_at_most(1));
  CHECK_FALSE(make_gaussian_bump(1, 1.0).is_polynomial_of_degree_at_most(5));
  CHECK(p(Point{2.0, 3.0}) == doctest::Approx(13.0));
}

TEST_CASE("mollified indicator plateaus") {
  const auto f = make_catalog_function("mollified_indicator", ParamRecord{{"dim", {2}}});
  CHECK(f(Point{0.3, 0.2}) == doctest::Approx(1.0));
  CHECK(f(Point{1.2, 1.0}) == 0.0);
  CHECK(f.support_radius() == doctest::Approx(1.5));
  const double mid = f(Point{1.0, 0.0});
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
}

TEST_CASE("catalog rejects bad input") {
  CHECK_THROWS_AS(make_catalog_function("nope", ParamRecord{{"dim", {1}}}), InvalidParameter);
  CHECK_THROWS_AS(make_catalog_function("gaussian_bump", ParamRecord{{"dim", {4}}}), InvalidParameter);
  CHECK_THROWS_AS(make_catalog_function("gaussian_bump", ParamRecord{{"dim", {1}}, {"sigma", {-1}}}), InvalidParameter);
}

TEST_CASE("grid sampling integrates a constant") {
  const GridSpec g{2, 1.5, 30};
  const auto s = sample([](const Point&) { return 2.0; }, g);
  CHECK(integrate(s) == doctest::Approx(2.0 * 9.0));
  CHECK(g.size() == 900);
}
