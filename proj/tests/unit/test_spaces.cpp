#include <doctest.h>

#include <cmath>

#include "bsvy/error.hpp"
#include "bsvy/spaces.hpp"

using namespace bsvy;

namespace {
SampledField bump(int dim, int n) {
  return sample(
      [dim](const Point& x) {
        double r2 = 0.0;
        for (int i = 0; i < dim; ++i) r2 += x[i] * x[i];
        return std::exp(-4.0 * r2) * (1.0 + x[0]);
      },
      GridSpec{dim, 1.0, n});
}
}  // namespace

TEST_CASE("Lebesgue norm of a constant") {
  const auto one = sample([](const Point&) { return 1.0; }, GridSpec{1, 1.0, 64});
  CHECK(space_norm(Lebesgue{2.0}, one) == doctest::Approx(std::sqrt(2.0)));
  CHECK(space_norm(Lebesgue{1.0}, one) == doctest::Approx(2.0));
}

TEST_CASE("coincidences with Lebesgue") {
  for (int dim : {1, 2}) {
    const auto g = bump(dim, dim == 1 ? 256 : 64);
    for (double p : {1.0, 2.0, 3.5}) {
      const double lp = space_norm(Lebesgue{p}, g);
      if (p > 1.0) CHECK(space_norm(Lorentz{p, p}, g) == doctest::Approx(lp).epsilon(1e-6));
      CHECK(space_norm(Morrey{p, p}, g) == doctest::Approx(lp).epsilon(1e-6));
      CHECK(space_norm(WeightedLebesgue{p, WeightSpec::constant(dim)}, g) == doctest::Approx(lp).epsilon(1e-9));
      Orlicz o;
      o.phi.p1 = p;
      CHECK(space_norm(o, g) == doctest::Approx(lp).epsilon(1e-6));
    }
  }
}

TEST_CASE("convexified norm is the q-th root of the norm of |g|^q") {
  const auto g = bump(1, 128);
  const double q = 1.7;
  const double direct = std::pow(space_norm(Lebesgue{2.0}, g.map([q](double v) { return std::pow(std::abs(v), q); })), 1.0 / q);
  CHECK(convexified_norm(Lebesgue{2.0}, q, g) == doctest::Approx(direct));
}

TEST_CASE("lattice property and homogeneity") {
  const auto g = bump(2, 48);
  const auto h = g.map([](double v) { return 0.3 * v; });
  for (const SpaceSpec& s : std::vector<SpaceSpec>{Lebesgue{1.5}, Lorentz{2.0, 3.0}, Morrey{3.0, 2.0},
                                                   MixedNorm{{2.0, 1.0, 2.0}}, HerzLocal{2.0, 2.0, 0.2, Point{}}}) {
    CHECK(lattice_check(s, h, g));
    CHECK(space_norm(s, g.scaled(-2.0)) == doctest::Approx(2.0 * space_norm(s, g)));
  }
}

TEST_CASE("space registry validation") {
  CHECK_THROWS_AS(make_space("nope", ParamRecord{}), InvalidParameter);
  CHECK_THROWS_AS(validate_space(Lebesgue{0.5}, 1), InvalidParameter);
  CHECK_THROWS_AS(validate_space(Morrey{1.0, 2.0}, 1), InvalidParameter);
  CHECK(space_tag(make_space("lorentz", ParamRecord{{"r", {2}}, {"tau", {3}}})) == "lorentz");
  CHECK(space_exponent(Lorentz{3.0, 1.0}) == 3.0);
}
