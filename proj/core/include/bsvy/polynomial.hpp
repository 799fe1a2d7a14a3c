#pragma once

#include <functional>
#include <vector>

#include "bsvy/field.hpp"
#include "bsvy/geometry.hpp"

namespace bsvy {

using ScalarFn = std::function<double(const Point&)>;

/// sum_alpha c_alpha ((x - center) / scale)^alpha over |alpha| <= degree.
class Polynomial {
 public:
  Polynomial(int dim, int degree, Point center, double scale, std::vector<double> coefficients);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Point& center() const { return center_; }
  double scale() const { return scale_; }
  const std::vector<MultiIndex>& basis() const { return basis_; }
  const std::vector<double>& coefficients() const { return coef_; }

  double operator()(const Point& x) const;
  double derivative(const Point& x, const MultiIndex& beta) const;
  /// Coefficient of the global monomial x^alpha.
  double global_coefficient(const MultiIndex& alpha) const;

 private:
  int dim_;
  int degree_;
  Point center_;
  double scale_;
  std::vector<MultiIndex> basis_;
  std::vector<double> coef_;
};

/// The degree-s polynomial P with int_Omega (f - P) x^alpha = 0 for |alpha| <= s,
/// i.e. the L^2(Omega) projection of f onto P_s. `resolution` points per axis.
Polynomial minimizing_polynomial(const ScalarFn& f, int dim, const Region& omega, int s, int resolution = 32);
Polynomial minimizing_polynomial(const AnalyticField& f, const Region& omega, int s, int resolution = 32);

/// max_alpha |int (f - P) b_alpha| / int |f| |b_alpha| in the cube-frame basis.
double moment_residual(const ScalarFn& f, const Polynomial& p, const Region& omega, int resolution = 32);

/// E_k(f, Omega) = ||f - P^{(k-1)}_Omega f||_{L^1(Omega)}
double local_approximation(const ScalarFn& f, int dim, const Region& omega, int k, int resolution = 32);
double local_approximation(const AnalyticField& f, const Region& omega, int k, int resolution = 32);

struct CheckedApproximation {
  double value = 0.0;    // at the base resolution
  double doubled = 0.0;  // at twice the resolution
  bool flagged = false;  // relative discrepancy above 1%
};
CheckedApproximation local_approximation_checked(const AnalyticField& f, const Region& omega, int k,
                                                 int resolution = 32);

}  // namespace bsvy
