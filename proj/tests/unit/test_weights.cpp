#include <doctest.h>

#include <cmath>

#include "bsvy/error.hpp"
#include "bsvy/weights.hpp"

using namespace bsvy;

TEST_CASE("constant weights have A_p constant exactly one") {
  const auto w = WeightSpec::constant(2, 3.0);
  for (double p : {1.0, 2.0, 4.0}) CHECK(ap_constant(w, p, default_family(w)) == 1.0);
}

TEST_CASE("A_1 constant of |x|^{-1/2} on the line is 2") {
  const auto w = WeightSpec::power(1, -0.5);
  CHECK(ap_constant(w, 1.0, default_family(w, 80)) == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("A_p constants decrease in p and diverge outside the range") {
  const auto w = WeightSpec::power(1, 0.5);
  const auto fam = default_family(w);
  CHECK(ap_constant(w, 2.0, fam) <= ap_constant(w, 1.5, fam));
  const auto bad = WeightSpec::power(1, 1.5);  // dual weight |x|^{-3/2} is not locally integrable
  CHECK(std::isinf(ap_constant(bad, 2.0, default_family(bad, 40))));
  const auto edge = WeightSpec::power(1, 1.0);  // a = n(p - 1): logarithmic divergence
  const double d40 = ap_constant(edge, 2.0, default_family(edge, 40));
  const double d160 = ap_constant(edge, 2.0, default_family(edge, 160));
  CHECK((std::isinf(d160) || d160 > 1.5 * d40));
}

TEST_CASE("cube mass of a power weight") {
  const auto w = WeightSpec::power(1, -0.5);
  const Cube q{1, Point{0.0}, 4.0};
  CHECK(cube_mass(w, q) == doctest::Approx(4.0).epsilon(1e-6));  // int_0^4 x^{-1/2} = 4
}

TEST_CASE("weight factory") {
  CHECK_THROWS_AS(make_weight("nope", ParamRecord{}), InvalidParameter);
  CHECK_THROWS_AS(WeightSpec::power(1, -1.0).validate(), InvalidParameter);
  CHECK(weight_tag(make_weight("power", ParamRecord{{"a", {0.5}}})) == "power");
}

TEST_CASE("critical index of a power weight") {
  const auto r = critical_index(WeightSpec::power(1, 1.0), default_r_grid());
  CHECK(r.index == doctest::Approx(2.0).epsilon(0.05));
}
