#pragma once

#include <string>
#include <vector>

#include "bsvy/calculus.hpp"
#include "bsvy/error.hpp"
#include "bsvy/field.hpp"
#include "bsvy/spaces.hpp"

namespace bsvy {

/// gamma in (-inf, -q) u (0, inf) when p = 1, gamma != 0 when p > 1.
bool gamma_valid(double p, double q, double gamma);

/// Geometric lambda grid: `per_decade` points per factor of ten from min to max.
struct LambdaGrid {
  double min = 1e-4;
  double max = 1e6;
  int per_decade = 16;

  void validate() const;
  std::vector<double> values() const;
};

struct HQuadrature {
  int directions = 0;            // sphere nodes; 0: 64 (dim 2) or 512 (dim 3)
  int radial_per_decade = 0;     // geometric nodes; 0: 64 (dim 1) or 32 otherwise
  int window_nodes = 128;        // uniform nodes per support radius inside the support windows
  double r_min_factor = 1e-6;    // r_min = factor * support radius (raised for k >= 2 by rounding)
  double r_max = 0.0;            // required only for fields without a finite support radius
};

struct FunctionalConfig {
  int k = 1;
  int ell = -1;  // -1: ell = k
  double q = 1.0;
  double gamma = 1.0;
  /// Added to gamma / q in the threshold exponent; s - 1 in the fractional
  /// Gagliardo-Nirenberg functionals.
  double b_offset = 0.0;
  SpaceSpec space = Lebesgue{2.0};
  /// false: lambda ||I^{1/q}||_X; true: lambda ||I||_X^{1/q} (outer norm in X^q).
  bool convexified = false;
  LambdaGrid lambdas;
  HQuadrature hquad;
  double box_factor = 1.5;   // outer box half-width in units of the support radius
  int points_per_axis = 0;   // 0: 4096 / 128 / 32 by dimension
  int threads = 0;           // 0: BSVY_THREADS or hardware concurrency
  bool strict = false;       // boundary argmax in bsvy_sup becomes an error

  int ell_value() const { return ell < 0 ? k : ell; }
  double b() const { return gamma / q + b_offset; }
  /// Exponent of |h| on the right of the level-set inequality.
  double threshold_exponent() const { return ell_value() + b(); }
  void validate(int dim) const;
};

/// Thrown under strict mode when the sup over the lambda grid sits on an
/// endpoint that widening could not resolve.
class BoundaryArgmax : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

int resolved_threads(int requested);

/// int 1{|Delta^k_h f(x)| > lambda |h|^{ell+b}} |h|^{gamma-n} dh for every
/// lambda of an increasing list; +inf where the integral diverges.
std::vector<double> inner_integrals(const AnalyticField& f, const Point& x, const std::vector<double>& lambdas,
                                    const FunctionalConfig& cfg);
double inner_integral(const AnalyticField& f, const Point& x, double lambda, const FunctionalConfig& cfg);

/// inner integrals on the outer grid, one array per lambda.
struct LevelSetField {
  GridSpec grid;
  std::vector<double> lambdas;
  std::vector<std::vector<double>> values;  // [lambda][cell]
};
GridSpec outer_grid(const AnalyticField& f, const FunctionalConfig& cfg);
LevelSetField level_set_field(const AnalyticField& f, const std::vector<double>& lambdas,
                              const FunctionalConfig& cfg);

/// lambda times the outer norm of the inner integral (see FunctionalConfig::convexified).
double functional_from_inner(const FunctionalConfig& cfg, double lambda, const GridSpec& grid,
                             const std::vector<double>& inner);

double bsvy_value(const AnalyticField& f, double lambda, const FunctionalConfig& cfg);
std::vector<double> bsvy_curve(const AnalyticField& f, const std::vector<double>& lambdas,
                               const FunctionalConfig& cfg);

/// ||grad^m f||_X on the outer grid.
double gradient_norm(const AnalyticField& f, int m, const FunctionalConfig& cfg);

struct SupScanResult {
  std::vector<double> lambdas;
  std::vector<double> values;
  double argmax_lambda = 0.0;
  double sup = 0.0;
  double rhs = 0.0;  // ||grad^ell f||_X
  double ratio = 0.0;
  int widenings = 0;
  bool plateau = false;          // argmax at the limit end with a flat tail
  bool boundary_warning = false;
};

/// Max over the lambda grid. An endpoint argmax widens the grid by two decades
/// (up to four times) unless the curve is flat there.
SupScanResult bsvy_sup(const AnalyticField& f, const FunctionalConfig& cfg);

struct LimitResult {
  bool to_infinity = true;  // gamma > 0: lambda -> inf; gamma < 0: lambda -> 0+
  std::vector<double> tail_lambdas;  // ordered toward the limit
  std::vector<double> tail_values;
  double limit = 0.0;       // mean of the last three tail values
  double predicted = 0.0;
  double rel_error = 0.0;
  bool monotone = true;
};

/// |gamma|^{-1/q} || [int_S |symbol(., xi)|^q dH(xi)]^{1/q} ||_X
double limit_prediction(const AnalyticField& f, const FunctionalConfig& cfg,
                        SymbolWeighting weighting = kDefaultSymbolWeighting);
LimitResult bsvy_limit(const AnalyticField& f, const FunctionalConfig& cfg,
                       SymbolWeighting weighting = kDefaultSymbolWeighting);

}  // namespace bsvy
