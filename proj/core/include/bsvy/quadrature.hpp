#pragma once

#include <vector>

#include "bsvy/field.hpp"

namespace bsvy {

struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
};

/// n-point Gauss-Legendre rule on [a, b].
Rule1D gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Composite Gauss-Legendre: `panels` equal panels of `order` points each.
Rule1D composite_gauss(int panels, int order, double a, double b);

/// Nodes and weights on S^{dim-1} with respect to surface measure.
/// dim 1: the two points +-1 with unit mass each (counting measure).
/// dim 2: `count` equally spaced angles (midpoint rule).
/// dim 3: Gauss-Legendre in cos(theta) times equally spaced azimuths, about
/// `count` nodes in total.
struct SphereRule {
  std::vector<Point> dirs;
  std::vector<double> w;
};
SphereRule sphere_rule(int dim, int count);

/// H^{n-1}(S^{n-1}): 2, 2 pi, 4 pi.
double sphere_area(int dim);
/// Lebesgue measure of the unit ball.
double unit_ball_volume(int dim);

/// Geometric nodes a = r_0 < ... < r_m = b with about `per_decade` cells per
/// factor of ten.
std::vector<double> geometric_nodes(double a, double b, int per_decade);

}  // namespace bsvy
