#pragma once

#include <string>
#include <vector>

#include "bsvy/field.hpp"
#include "bsvy/geometry.hpp"

namespace bsvy {

/// constant: c; power: |x|^a; shifted_power: |x - x0|^a.
struct WeightSpec {
  enum class Kind { constant, power, shifted_power };
  Kind kind = Kind::constant;
  int dim = 1;
  double c = 1.0;
  double a = 0.0;
  Point x0{};

  static WeightSpec constant(int dim, double c = 1.0);
  static WeightSpec power(int dim, double a);
  static WeightSpec shifted_power(int dim, double a, const Point& x0);

  void validate() const;
  double operator()(const Point& x) const;
  /// The point where a power weight degenerates (origin for constants).
  Point singular_point() const;
  bool is_constant() const { return kind == Kind::constant || a == 0.0; }
};

std::string weight_tag(const WeightSpec& w);
WeightSpec make_weight(const std::string& tag, const ParamRecord& params);
ParamRecord weight_params(const WeightSpec& w);

/// int_Q w^s. Closed form in dimension 1; 64 points per axis midpoint rule
/// otherwise. +inf when the integral diverges.
double cube_mass(const WeightSpec& w, const Cube& q, double s = 1.0);
/// ess inf of w over Q from the closed form of the catalog entry.
double ess_inf(const WeightSpec& w, const Cube& q);

struct CubeFamily {
  std::vector<Cube> cubes;
};

/// Dyadic cubes of levels [jmin, jmax] around the singular point together with
/// unit cubes at distance 2^{-i}, i = 1..accumulating, on either side of it.
CubeFamily default_family(const WeightSpec& w, int accumulating = 40, int jmin = -10, int jmax = 4);

/// A_p quotient of one cube; A_1 uses the essential infimum.
double ap_quotient(const WeightSpec& w, double p, const Cube& q);
/// Maximum quotient over the family (a lower bound for [w]_{A_p}).
double ap_constant(const WeightSpec& w, double p, const CubeFamily& family);

bool doubling_check(const WeightSpec& w, double p, const Cube& q, const Cube& s, double ap_est);

struct CriticalIndexResult {
  double index;  // +inf when no grid value stabilizes
  std::vector<double> r_grid;
  /// estimates[i] holds ap_constant at accumulation depths 40, 80, 160.
  std::vector<std::array<double, 3>> estimates;
};

/// Smallest grid r for which ap_constant changes by < 5% under two successive
/// refinements of the accumulating cubes.
CriticalIndexResult critical_index(const WeightSpec& w, const std::vector<double>& r_grid);
std::vector<double> default_r_grid();

}  // namespace bsvy
