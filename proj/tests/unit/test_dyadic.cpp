#include <doctest.h>

#include <cmath>
#include <random>

#include "bsvy/dyadic.hpp"
#include "bsvy/error.hpp"
#include "bsvy/polynomial.hpp"

using namespace bsvy;

TEST_CASE("shifted dyadic grids") {
  CHECK(all_shift_vectors(1).size() == 3);
  CHECK(all_shift_vectors(2).size() == 9);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(-50.0, 50.0);
  for (int t = 0; t < 200; ++t) {
    const Point x{U(rng), U(rng)};
    for (const auto& s : all_shift_vectors(2))
      for (int j : {-5, 0, 3}) {
        const DyadicCube c = dyadic_cube_containing(2, s, j, x);
        CHECK(c.geometry().contains(x));
        CHECK(c.geometry().edge == std::ldexp(1.0, j));
      }
  }
}

TEST_CASE("every ball sits in a comparable shifted dyadic cube") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(-10.0, 10.0), R(-8.0, 3.0);
  for (int t = 0; t < 300; ++t) {
    const Ball b{2, Point{U(rng), U(rng)}, std::exp(R(rng))};
    const ContainingCube c = containing_cube(b);
    CHECK(c.ratio < kContainingRatio);
    const Cube g = c.cube.geometry();
    CHECK(g.contains(Cube{2, Point{b.center[0] - b.radius, b.center[1] - b.radius}, 2 * b.radius}));
  }
}

TEST_CASE("minimizing polynomial of x^2 on [0,1]") {
  const Region unit = Cube{1, Point{0.0}, 1.0};
  const auto p = minimizing_polynomial([](const Point& x) { return x[0] * x[0]; }, 1, unit, 1);
  CHECK(p.global_coefficient(MultiIndex{{1, 0, 0}}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.global_coefficient(MultiIndex{}) == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));
  CHECK(moment_residual([](const Point& x) { return x[0] * x[0]; }, p, unit) < 1e-12);
}

TEST_CASE("level scans ignore low-degree polynomials") {
  const auto lin = make_polynomial(1, {MultiIndex{{1, 0, 0}}}, {1.0});
  LevelScanParams lp;
  lp.k = 2;
  const LevelScan scan(lin, lp);
  CHECK(scan.cubes().empty());
}

TEST_CASE("qx ratio stays within the geometric bound") {
  const auto f = make_gaussian_bump(1, 1.0);
  LevelScanParams lp;
  lp.beta = 0.5;
  const LevelScan scan(f, lp);
  const auto grid = sparse_lambda_grid(scan, 20);
  REQUIRE_FALSE(grid.empty());
  int covered = 0;
  for (double lam : grid) {
    const LevelFamily fam = level_family(scan, lam);
    for (double x : {-0.7, 0.1, 0.9}) {
      try {
        const QxResult q = qx_check(fam, 1.0, Point{x});
        CHECK(q.ratio >= 1.0 - 1e-12);
        CHECK(q.ratio <= q.bound * (1.0 + 1e-9));
        ++covered;
      } catch (const InvalidParameter&) {
      }
    }
  }
  CHECK(covered > 0);
}

TEST_CASE("averaged modulus scales like a^{n-1} under dilation") {
  const auto f = make_gaussian_bump(2, 0.6);
  const Cube q{2, Point{-0.3, -0.2}, 0.5};
  const double a = 2.5;
  const double base = averaged_modulus(f, q);
  const double scaled = averaged_modulus(f.dilated(1.0 / a), q.dilated(a));
  CHECK(scaled == doctest::Approx(std::pow(a, 1.0) * base).epsilon(1e-8));
}

TEST_CASE("Whitney comparison is bounded and exact on polynomials") {
  const auto f = make_gaussian_bump(1, 0.5);
  const WhitneyResult w = whitney_ratio(f, Cube{1, Point{-0.4}, 0.8}, 2);
  CHECK(w.ratio > 0.0);
  CHECK(w.ratio < 10.0);
  const auto p = make_polynomial(1, {MultiIndex{{1, 0, 0}}}, {1.0});
  CHECK(whitney_ratio(p, Cube{1, Point{0.0}, 1.0}, 2).exact_zero_pair);
}

TEST_CASE("weighted gradient integral of a gaussian") {
  // int (d/dx e^{-x^2})^2 dx = sqrt(pi / 2)
  const auto f = make_gaussian_bump(1, 1.0);
  const double e = weighted_gradient_integral(f, 1, 2.0, WeightSpec::constant(1));
  CHECK(e == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-6));
}

TEST_CASE("averaged modulus closed forms") {
  const auto x = make_polynomial(1, {MultiIndex{{1, 0, 0}}}, {1.0});
  // |f(x) - f(y)| has a kink on the diagonal: the tensor rule converges like N^-2
  const double coarse = averaged_modulus(x, Cube{1, Point{0.0}, 1.0}, 64);
  const double fine = averaged_modulus(x, Cube{1, Point{0.0}, 1.0}, 256);
  CHECK(fine == doctest::Approx(1.0 / 3.0).epsilon(1e-4));
  CHECK(std::abs(fine - 1.0 / 3.0) < std::abs(coarse - 1.0 / 3.0) / 8.0);
  const auto g = make_gaussian_bump(1, 0.8);
  const Cube q{1, Point{-0.2}, 0.7};
  CHECK(averaged_modulus(g.dilated(1.0 / 3.0), q.dilated(3.0)) == doctest::Approx(averaged_modulus(g, q)).epsilon(1e-8));
  const auto c = make_polynomial(1, {MultiIndex{}}, {4.0});
  CHECK(averaged_modulus(c, q) == 0.0);
}

TEST_CASE("Poincare ratio of x^2 on [0,1] with k = 1") {
  // P = 1/3; int_0^1 |x^2 - 1/3| = 4 / (9 sqrt 3); int_0^1 |2x| = 1
  const auto f = make_polynomial(1, {MultiIndex{{2, 0, 0}}}, {1.0});
  const PoincareResult r = poincare_ratio(f, Cube{1, Point{0.0}, 1.0}, 1, 0, Lebesgue{1.0});
  CHECK(r.numerator == doctest::Approx(4.0 / (9.0 * std::sqrt(3.0))).epsilon(1e-3));
  CHECK(r.denominator == doctest::Approx(1.0).epsilon(1e-3));
  const auto lin = make_polynomial(1, {MultiIndex{{0, 0, 0}}}, {2.0});
  CHECK(poincare_ratio(lin, Cube{1, Point{0.0}, 1.0}, 1, 0, Lebesgue{1.0}).polynomial);
}

TEST_CASE("variant Poincare lhs for x^2 on the unit ball") {
  const auto f = make_polynomial(1, {MultiIndex{{2, 0, 0}}}, {1.0});
  const Ball b{1, Point{0.0}, 1.0};
  const VariantPoincareResult r = variant_poincare_check(f, Point{0.0}, 1.0, b, 1, 12);
  CHECK(r.lhs == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(r.ratio < 20.0);
}

TEST_CASE("level families shrink as lambda grows") {
  const auto f = make_gaussian_bump(1, 1.0);
  LevelScanParams lp;
  lp.beta = 0.5;
  const LevelScan scan(f, lp);
  const auto grid = sparse_lambda_grid(scan, 30);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const auto big = scan.members(grid[i - 1]), small = scan.members(grid[i]);
    CHECK(small.size() <= big.size());
    for (const auto& c : small)
      CHECK(std::any_of(big.begin(), big.end(), [&](const CubeRecord& b) { return b.cube == c.cube; }));
  }
}
