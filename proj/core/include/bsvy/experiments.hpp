#pragma once

#include <limits>
#include <string>
#include <vector>

#include "bsvy/calculus.hpp"
#include "bsvy/functional.hpp"
#include "bsvy/weights.hpp"

namespace bsvy {

// ---- fractional Gagliardo-Nirenberg ---------------------------------------

enum class GnMode { interpolation_ss, endpoint_inf, two_parameter };
std::string to_string(GnMode m);
GnMode parse_gn_mode(const std::string& s);

struct GnParams {
  GnMode mode = GnMode::interpolation_ss;
  double s = 0.5;
  double q0 = 2.0;  // +inf for endpoint_inf
  double q = 4.0 / 3.0;
  double eta = 0.5;  // two_parameter only
  double s0 = 0.0;   // two_parameter only

  /// Throws InvalidParameter when the exponent relations of the mode fail by more than 1e-12.
  void validate() const;
};

struct GnReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double lhs_argmax = 0.0;
  double grad_km1 = 0.0;  // ||grad^{k-1} f|| in X^{q0} (or L^inf)
  double grad_k = 0.0;    // ||grad^k f||_X
  double inner_sup = 0.0; // two_parameter: sup lambda ||I_0||_X^{1/q0}
};

/// lhs = sup_lambda lambda ||I||_X^{1/q} with b = gamma/q + s - 1. The
/// two-parameter right side is [sup lambda ||I_0||^{1/q0}]^{1-eta} ||grad^k f||^eta.
GnReport gn_check(const AnalyticField& f, const FunctionalConfig& base, const GnParams& params);

// ---- sharpness ------------------------------------------------------------

struct SharpnessParams {
  int dim = 2;
  double p = 1.0;
  double q = 2.0;
  int k = 1;
  int ell = 1;
  double gamma = std::numeric_limits<double>::quiet_NaN();  // NaN: -ell q
  double lambda = 0.75;
  std::vector<double> radii{8.0, 16.0, 32.0, 64.0};
  int directions = 4096;
};

struct SharpnessRow {
  double radius = 0.0;
  double value = 0.0;  // int_{|x|<R} I(x)^{p/q} dx
};

struct SharpnessReport {
  std::vector<SharpnessRow> rows;
  double growth = 0.0;   // value(last) / value(first)
  bool monotone = true;
  double excess = 0.0;   // n(1/p - 1/q) - ell
};

/// Mollified-indicator witness, radially reduced: value(R) = |S| int_0^R F(r) r^{n-1} dr.
SharpnessReport sharpness_experiment(const SharpnessParams& params);

// ---- defect ---------------------------------------------------------------

struct DefectReport {
  std::vector<double> eps;
  std::vector<double> values;  // strong seminorm^q at s = k
  double slope = 0.0;          // against log(1/eps)
  double intercept = 0.0;
  double r2 = 0.0;
  bool polynomial = false;
  bool pass = false;
};

DefectReport defect_experiment(const AnalyticField& f, int k, double q, const std::vector<double>& eps_list,
                               const SeminormQuadrature& quad = {});

// ---- weighted upper bound ---------------------------------------------------

struct WeightedUpperReport {
  std::vector<double> lambdas;
  std::vector<double> values;  // lambda^p int I^{p/q} w
  double sup = 0.0;
  double rhs = 0.0;            // int |grad^ell f|^p w
  double ratio = 0.0;
  double a1_estimate = 0.0;
};

/// cfg supplies k, ell, q, gamma, the lambda grid and quadrature; cfg.space is ignored.
WeightedUpperReport weighted_upper_check(const AnalyticField& f, const WeightSpec& w, double p,
                                         const FunctionalConfig& cfg);

}  // namespace bsvy
