#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsvy/field.hpp"
#include "bsvy/spaces.hpp"

namespace bsvy {

/// Exact C(k, j) for 0 <= j <= k <= 62.
std::int64_t binomial(int k, int j);

/// sum_{j=0}^k (-1)^{k-j} C(k,j) f(x + j h)
double forward_difference(const AnalyticField& f, const Point& x, const Point& h, int k);
/// sum_j (-1)^{k-j} C(k,j) f(((k-j) x + j y) / k)
double symmetric_difference(const AnalyticField& f, const Point& x, const Point& y, int k);

/// [sum_{|alpha|=k} |d^alpha f(x)|^2]^{1/2}; k = 0 gives |f(x)|.
double gradient_magnitude(const AnalyticField& f, const Point& x, int k);

/// plain: sum_{|alpha|=k} d^alpha f xi^alpha.
/// multinomial: sum_{|alpha|=k} (k!/alpha!) d^alpha f xi^alpha, the k-th
/// directional derivative along xi.
enum class SymbolWeighting { plain, multinomial };

/// Fixed by limit_symbol_oracle: |Delta^k_{r xi} f(x)| / r^k converges to the
/// multinomial sum (see README).
inline constexpr SymbolWeighting kDefaultSymbolWeighting = SymbolWeighting::multinomial;

std::string to_string(SymbolWeighting w);
SymbolWeighting parse_symbol_weighting(const std::string& s);

double directional_symbol(const AnalyticField& f, const Point& x, const Point& xi, int k,
                          SymbolWeighting weighting = kDefaultSymbolWeighting);

enum class OracleVerdict { plain, multinomial, both, indeterminate };
std::string to_string(OracleVerdict v);

struct SymbolOracleResult {
  std::vector<double> r;
  std::vector<double> quotient;  // |Delta^k_{r xi} f(x)| / r^k
  double limit = 0.0;            // first-order Richardson extrapolation
  double plain = 0.0;            // |plain symbol|
  double multinomial = 0.0;      // |multinomial symbol|
  double slope_plain = 0.0;      // log-log slope of |quotient - plain| against r
  double slope_multinomial = 0.0;
  OracleVerdict verdict = OracleVerdict::indeterminate;
};

/// r_sequence must be geometric and decreasing with at least 6 entries.
/// A residual at rounding level counts as exact (slope +inf); a candidate is
/// accepted when its residual slope is >= 0.5.
SymbolOracleResult limit_symbol_oracle(const AnalyticField& f, const Point& x, const Point& xi, int k,
                                       const std::vector<double>& r_sequence);
/// 0.1 * 2^{-i}, i = 0..7
std::vector<double> default_oracle_radii();

struct SeminormQuadrature {
  int directions = 64;         // sphere nodes for dim >= 2
  int radial_per_decade = 32;  // geometric cells in |h|
  double h_max = 0.0;          // 0: the field's effective radius
  int points_per_axis = 0;     // outer grid; 0: 1024 / 128 / 32 by dimension
  std::optional<SpaceSpec> outer;  // default L^q
};

/// || [int_{eps <= |h| <= H} |Delta^k_h f|^q |h|^{-n-sq} dh]^{1/q} ||_X
double strong_seminorm(const AnalyticField& f, int k, double s, double q, double eps,
                       const SeminormQuadrature& quad = {});

/// Cardinal B-spline M_k: M_1 = 1_{[0,1)}, M_{k+1} = M_k * M_1.
class SplineKernel {
 public:
  explicit SplineKernel(int k);
  int order() const { return k_; }
  double operator()(double t) const;

 private:
  int k_;
};

/// |Delta^k_h f(x) - int_0^k M_k(t) sum_{|z|=k} (k!/z!) d^z f(x + t h) h^z dt|
/// with the integral on 10^3 nodes of a composite two-point Gauss rule whose
/// panels align with the knots of M_k.
double spline_identity_residual(const AnalyticField& f, const Point& x, const Point& h, int k);

}  // namespace bsvy
