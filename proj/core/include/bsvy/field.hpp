#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bsvy {

inline constexpr int kMaxDim = 3;

/// A point or vector of R^n, n <= 3. Components past the active dimension are
/// kept at zero so that Euclidean helpers can ignore the dimension.
using Point = std::array<double, kMaxDim>;

double norm(const Point& x);
double dot(const Point& x, const Point& y);
Point axpy(double a, const Point& x, const Point& y);  // a*x + y

struct MultiIndex {
  std::array<int, kMaxDim> c{};

  int order() const { return c[0] + c[1] + c[2]; }
  bool operator==(const MultiIndex&) const = default;
  auto operator<=>(const MultiIndex&) const = default;
};

/// All multi-indices of the given dimension with |alpha| == order, in
/// lexicographically decreasing order of the first component.
std::vector<MultiIndex> multi_indices_of_order(int dim, int order);
/// All multi-indices with |alpha| <= degree, grouped by increasing order.
std::vector<MultiIndex> multi_indices_up_to(int dim, int degree);

double factorial(int n);
/// alpha! = prod alpha_i!
double multi_factorial(const MultiIndex& alpha);
/// x^alpha
double monomial(const Point& x, const MultiIndex& alpha, int dim);

/// Uniform cell-centred grid on [-L, L]^dim.
struct GridSpec {
  int dim = 1;
  double half_width = 1.0;
  int points_per_axis = 64;

  void validate() const;
  double cell_width() const { return 2.0 * half_width / points_per_axis; }
  double cell_volume() const { return std::pow(cell_width(), dim); }
  std::size_t size() const;
  /// Centre of the cell with flat index i; axis 0 varies slowest.
  Point center(std::size_t i) const;
  std::array<int, kMaxDim> unflatten(std::size_t i) const;
};

/// Values of a scalar quantity at the cell centres of a grid.
class SampledField {
 public:
  SampledField(GridSpec grid, std::vector<double> values);

  const GridSpec& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  SampledField map(const std::function<double(double)>& op) const;
  SampledField scaled(double c) const;

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/// Named numeric parameters; scalars are one-element vectors.
class ParamRecord {
 public:
  ParamRecord() = default;
  ParamRecord(std::initializer_list<std::pair<const std::string, std::vector<double>>> init)
      : values_(init) {}

  void set(const std::string& key, double v) { values_[key] = {v}; }
  void set(const std::string& key, std::vector<double> v) { values_[key] = std::move(v); }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  double get(const std::string& key) const;
  double get(const std::string& key, double fallback) const;
  const std::vector<double>& list(const std::string& key) const;
  std::vector<double> list(const std::string& key, std::vector<double> fallback) const;
  const std::map<std::string, std::vector<double>>& entries() const { return values_; }

 private:
  std::map<std::string, std::vector<double>> values_;
};

class FieldModel;

/// A closed-form test function with partial derivatives up to a fixed order.
/// Cheap to copy; the model behind it is immutable.
class AnalyticField {
 public:
  explicit AnalyticField(std::shared_ptr<const FieldModel> model);

  int dim() const;
  int max_derivative_order() const;
  /// f and its catalog derivatives vanish outside B(0, support_radius);
  /// +inf for entries without compact support.
  double support_radius() const;
  /// Radius outside which |f| is below 1e-30 * sup|f|; used to truncate
  /// quadratures. Equals support_radius for compactly supported entries.
  double effective_radius() const;
  /// Upper bound for sup |f| (+inf when unbounded).
  double sup_bound() const;
  bool derivatives_exact() const;
  /// Degree for polynomial entries (-1 for the zero polynomial too), -2 otherwise.
  int polynomial_degree() const;
  /// True when f is a polynomial of degree <= d.
  bool is_polynomial_of_degree_at_most(int d) const;
  const std::string& catalog_id() const;
  const ParamRecord& params() const;

  double operator()(const Point& x) const;
  double derivative(const Point& x, const MultiIndex& alpha) const;

  /// x -> f(a x).
  AnalyticField dilated(double a) const;

 private:
  std::shared_ptr<const FieldModel> model_;
};

class FieldModel {
 public:
  virtual ~FieldModel() = default;
  virtual int dim() const = 0;
  virtual int max_derivative_order() const = 0;
  virtual double support_radius() const = 0;
  virtual double effective_radius() const { return support_radius(); }
  virtual double sup_bound() const = 0;
  virtual bool derivatives_exact() const { return true; }
  virtual int polynomial_degree() const { return -2; }
  virtual double value(const Point& x) const = 0;
  virtual double derivative(const Point& x, const MultiIndex& alpha) const = 0;

  std::string catalog_id;
  ParamRecord params;
};

/// Catalog ids: polynomial, gaussian_bump, windowed_sinusoid,
/// mollified_indicator. Every entry accepts an optional "dilation" a > 0
/// which replaces f by f(a .).
AnalyticField make_catalog_function(const std::string& catalog_id, const ParamRecord& params);

/// Convenience constructors used throughout tests and experiments.
AnalyticField make_polynomial(int dim, const std::vector<MultiIndex>& exponents,
                              const std::vector<double>& coefficients);
AnalyticField make_gaussian_bump(int dim, double sigma, MultiIndex monomial = {},
                                 double amplitude = 1.0);

SampledField sample(const AnalyticField& f, const GridSpec& grid);
SampledField sample(const std::function<double(const Point&)>& f, const GridSpec& grid);

/// Sum of values times cell volume.
double integrate(const SampledField& g);

}  // namespace bsvy
