#pragma once

#include <array>
#include <vector>

#include "bsvy/field.hpp"
#include "bsvy/geometry.hpp"
#include "bsvy/polynomial.hpp"
#include "bsvy/spaces.hpp"
#include "bsvy/weights.hpp"

namespace bsvy {

/// Shift components are stored in thirds: alpha_i = shift[i] / 3.
using Shift = std::array<int, kMaxDim>;

/// 2^j (m + [0,1)^n + (-1)^j alpha)
struct DyadicCube {
  int dim = 1;
  Shift shift{};
  int level = 0;
  std::array<long long, kMaxDim> m{};

  Cube geometry() const;
  double volume() const { return std::ldexp(1.0, level * dim); }
  bool operator==(const DyadicCube&) const = default;
};

Cube cube_geometry(int dim, const Shift& shift, int level, const std::array<long long, kMaxDim>& m);
/// The cube of D^alpha at level j that contains x.
DyadicCube dyadic_cube_containing(int dim, const Shift& shift, int level, const Point& x);
/// All 3^dim shifts.
std::vector<Shift> all_shift_vectors(int dim);

/// Among the three shifted grids at least two are free of cut points on every
/// axis once 2^j >= 3 diam(B), so the first hit has edge / diam < 6.
inline constexpr double kContainingRatio = 6.0;

struct ContainingCube {
  DyadicCube cube;
  double ratio = 0.0;  // edge / diam(B)
};
ContainingCube containing_cube(const Ball& b, int jmin = -40, int jmax = 40);

// ---- level-set cube families ---------------------------------------------

struct LevelScanParams {
  double beta = 0.0;
  int k = 1;
  int ell = 1;
  Shift shift{};
  int jmin = -10;
  int jmax = 4;
  int resolution = 32;
  bool check_resolution = false;
};

struct CubeRecord {
  DyadicCube cube;
  double e_k = 0.0;
  double tau = 0.0;  // E_k / |Q|^{beta + ell/n}
  bool flagged = false;
};

/// E_k over every cube of the window that meets the support of f; families for
/// any lambda are read off the stored thresholds.
class LevelScan {
 public:
  LevelScan(const AnalyticField& f, const LevelScanParams& params);

  const LevelScanParams& params() const { return params_; }
  int dim() const { return dim_; }
  const std::vector<CubeRecord>& cubes() const { return cubes_; }
  /// Cubes with E_k > lambda |Q|^{beta + ell/n}.
  std::vector<CubeRecord> members(double lambda) const;
  /// Smallest and largest positive tau.
  std::pair<double, double> tau_range() const;
  int flagged_count() const;

 private:
  LevelScanParams params_;
  int dim_;
  std::vector<CubeRecord> cubes_;
};

struct LevelFamily {
  double lambda = 0.0;
  LevelScanParams params;
  int dim = 1;
  std::vector<CubeRecord> members;
};

LevelFamily level_family(const AnalyticField& f, double lambda, const LevelScanParams& params);
LevelFamily level_family(const LevelScan& scan, double lambda);

/// sum over members of |Q|^{p(beta - 1)} w(Q)
double sparse_sum(const LevelFamily& family, double p, double beta, const WeightSpec& w);

struct SparseSupResult {
  std::vector<double> lambdas;
  std::vector<double> values;  // lambda^p * sparse_sum
  double sup = 0.0;
  double rhs = 0.0;  // int |grad^ell f|^p w
  double ratio = 0.0;
};

/// 60 geometric lambdas spanning the threshold range of the scan.
std::vector<double> sparse_lambda_grid(const LevelScan& scan, int count = 60);
SparseSupResult sparse_sup(const AnalyticField& f, const LevelScan& scan, double p, const WeightSpec& w,
                           const std::vector<double>& lambdas);

/// int |grad^ell f|^p w over the support of f.
double weighted_gradient_integral(const AnalyticField& f, int ell, double p, const WeightSpec& w);

struct QxResult {
  DyadicCube qx;
  double ratio = 1.0;
  double bound = 1.0;  // sum_j 2^{-j n p |beta - 1|}
  int containing = 0;
};

/// Minimal (beta < 1) or maximal (beta > 1) member containing x.
QxResult qx_check(const LevelFamily& family, double p, const Point& x);

/// |Q|^{-1-1/n} int_Q int_Q |f(x) - f(y)| dx dy
double averaged_modulus(const ScalarFn& f, int dim, const Cube& q, int resolution = 32);
double averaged_modulus(const AnalyticField& f, const Cube& q, int resolution = 32);

struct WhitneyResult {
  double e_k = 0.0;
  double sup_difference = 0.0;
  double ratio = 0.0;
  bool exact_zero_pair = false;
};

/// E_k(f,Q) / sup_{|h| <= l(Q)/k} ||Delta^k_h f||_{L^1(Q(k,h))} over 64 directions x 16 radii.
WhitneyResult whitney_ratio(const AnalyticField& f, const Cube& q, int k, int resolution = 32);

struct PoincareResult {
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  bool polynomial = false;  // f in P_{k-1}: numerator reported as 0
};

/// ||grad^j (f - P) 1_Omega||_X / (R^{k-j} ||grad^k f 1_Omega||_X) with P the
/// degree-(k-1) minimizing polynomial of Omega, evaluated on a masked grid.
PoincareResult poincare_ratio(const AnalyticField& f, const Region& omega, int k, int j, const SpaceSpec& spec,
                              int points_per_axis = 0);

struct VariantPoincareResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// lhs = |f(x) - P_{B1} f(x)|, rhs = sum_{j=0}^J avg_{2^{-j}B} |f - P_{2^{-j}B} f|
VariantPoincareResult variant_poincare_check(const AnalyticField& f, const Point& x, double radius,
                                             const Ball& b1, int k, int depth);

}  // namespace bsvy
