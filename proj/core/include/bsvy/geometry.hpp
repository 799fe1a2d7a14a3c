#pragma once

#include <variant>
#include <vector>

#include "bsvy/field.hpp"

namespace bsvy {

/// Axis-parallel cube corner + [0, edge)^dim.
struct Cube {
  int dim = 1;
  Point corner{};
  double edge = 1.0;

  double volume() const { return std::pow(edge, dim); }
  Point center() const;
  bool contains(const Point& x) const;
  /// Closed-set inclusion with a relative slack of 1e-12.
  bool contains(const Cube& other) const;
  Cube dilated(double a) const;
};

struct Ball {
  int dim = 1;
  Point center{};
  double radius = 1.0;
};

struct Annulus {
  int dim = 2;
  Point center{};
  double inner = 0.5;
  double outer = 1.0;
};

using Region = std::variant<Cube, Ball, Annulus>;

int region_dim(const Region& r);
double region_measure(const Region& r);
bool region_contains(const Region& r, const Point& x);
/// Edge length for cubes, outer radius otherwise.
double region_size(const Region& r);
/// A point well inside the region used to centre polynomial bases.
Point region_center(const Region& r);
Region region_dilated(const Region& r, double a);

struct NodeSet {
  std::vector<Point> x;
  std::vector<double> w;
};

/// Tensor Gauss-Legendre on cubes; polar product rules on balls and annuli.
/// `resolution` is the number of points per axis (radial and angular counts
/// are derived from it).
NodeSet region_nodes(const Region& r, int resolution);

}  // namespace bsvy
