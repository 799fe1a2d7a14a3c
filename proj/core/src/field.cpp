#include "bsvy/field.hpp"

#include <algorithm>
#include <mutex>
#include <numbers>
#include <sstream>

#include "bsvy/detail/jet.hpp"
#include "bsvy/error.hpp"

namespace bsvy {

using detail::Jet;

double norm(const Point& x) { return std::sqrt(dot(x, x)); }

double dot(const Point& x, const Point& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Point axpy(double a, const Point& x, const Point& y) {
  return {a * x[0] + y[0], a * x[1] + y[1], a * x[2] + y[2]};
}

std::vector<MultiIndex> multi_indices_of_order(int dim, int order) {
  std::vector<MultiIndex> out;
  if (dim == 1) {
    out.push_back({{order, 0, 0}});
  } else if (dim == 2) {
    for (int a = order; a >= 0; --a) out.push_back({{a, order - a, 0}});
  } else {
    for (int a = order; a >= 0; --a)
      for (int b = order - a; b >= 0; --b) out.push_back({{a, b, order - a - b}});
  }
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(int dim, int degree) {
  std::vector<MultiIndex> out;
  for (int s = 0; s <= degree; ++s) {
    auto level = multi_indices_of_order(dim, s);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double multi_factorial(const MultiIndex& alpha) {
  return factorial(alpha.c[0]) * factorial(alpha.c[1]) * factorial(alpha.c[2]);
}

double monomial(const Point& x, const MultiIndex& alpha, int dim) {
  double r = 1.0;
  for (int i = 0; i < dim; ++i)
    for (int e = 0; e < alpha.c[i]; ++e) r *= x[i];
  return r;
}

// ---------------------------------------------------------------- GridSpec

void GridSpec::validate() const {
  require(dim >= 1 && dim <= kMaxDim, "grid dim must be 1, 2, or 3");
  require(points_per_axis >= 8, "grid needs at least 8 points per axis");
  require(half_width > 0.0 && std::isfinite(half_width), "grid half_width must be positive");
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(points_per_axis);
  return n;
}

std::array<int, kMaxDim> GridSpec::unflatten(std::size_t i) const {
  std::array<int, kMaxDim> idx{};
  for (int a = dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(i % points_per_axis);
    i /= points_per_axis;
  }
  return idx;
}

Point GridSpec::center(std::size_t i) const {
  const auto idx = unflatten(i);
  const double h = cell_width();
  Point x{};
  for (int a = 0; a < dim; ++a) x[a] = -half_width + (idx[a] + 0.5) * h;
  return x;
}

// ------------------------------------------------------------ SampledField

SampledField::SampledField(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  require(values_.size() == grid_.size(), "sampled field size does not match its grid");
  for (double v : values_) require(std::isfinite(v), "sampled field contains a non-finite value");
}

SampledField SampledField::map(const std::function<double(double)>& op) const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), op);
  return SampledField(grid_, std::move(out));
}

SampledField SampledField::scaled(double c) const {
  return map([c](double v) { return c * v; });
}

double integrate(const SampledField& g) {
  double s = 0.0;
  for (double v : g.values()) s += v;
  return s * g.grid().cell_volume();
}

// ------------------------------------------------------------- ParamRecord

double ParamRecord::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end() || it->second.empty())
    throw InvalidParameter("missing parameter '" + key + "'");
  return it->second.front();
}

double ParamRecord::get(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  return (it == values_.end() || it->second.empty()) ? fallback : it->second.front();
}

const std::vector<double>& ParamRecord::list(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw InvalidParameter("missing parameter '" + key + "'");
  return it->second;
}

std::vector<double> ParamRecord::list(const std::string& key, std::vector<double> fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

// ------------------------------------------------------------------ models

namespace {

class PolynomialModel final : public FieldModel {
 public:
  PolynomialModel(int dim, std::vector<MultiIndex> exps, std::vector<double> coefs)
      : dim_(dim), exps_(std::move(exps)), coefs_(std::move(coefs)) {}

  int dim() const override { return dim_; }
  int max_derivative_order() const override { return 64; }
  int polynomial_degree() const override {
    int d = -1;
    for (std::size_t t = 0; t < exps_.size(); ++t)
      if (coefs_[t] != 0.0) d = std::max(d, exps_[t].order());
    return d;
  }
  double support_radius() const override {
    return std::all_of(coefs_.begin(), coefs_.end(), [](double c) { return c == 0.0; })
               ? 0.0
               : std::numeric_limits<double>::infinity();
  }
  double sup_bound() const override {
    for (std::size_t t = 0; t < exps_.size(); ++t)
      if (coefs_[t] != 0.0 && exps_[t].order() > 0) return std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (double c : coefs_) s += std::abs(c);
    return s;
  }
  double value(const Point& x) const override {
    double s = 0.0;
    for (std::size_t t = 0; t < exps_.size(); ++t) s += coefs_[t] * monomial(x, exps_[t], dim_);
    return s;
  }
  double derivative(const Point& x, const MultiIndex& alpha) const override {
    double s = 0.0;
    for (std::size_t t = 0; t < exps_.size(); ++t) {
      double term = coefs_[t];
      for (int i = 0; i < dim_ && term != 0.0; ++i) {
        const int e = exps_[t].c[i];
        const int a = alpha.c[i];
        if (a > e) {
          term = 0.0;
          break;
        }
        for (int j = 0; j < a; ++j) term *= (e - j);
        term *= std::pow(x[i], e - a);
      }
      s += term;
    }
    return s;
  }

 private:
  int dim_;
  std::vector<MultiIndex> exps_;
  std::vector<double> coefs_;
};

// A * prod_i (x_i - c_i)^{m_i} exp(-(x_i - c_i)^2 / sigma^2)
class GaussianModel final : public FieldModel {
 public:
  GaussianModel(int dim, double sigma, MultiIndex mono, double amp, Point center, int order)
      : dim_(dim), sigma_(sigma), mono_(mono), amp_(amp), center_(center), order_(order) {
    double bound = std::abs(amp_);
    for (int i = 0; i < dim_; ++i) {
      const int b = mono_.c[i];
      if (b > 0) bound *= std::pow(b * sigma_ * sigma_ / 2.0, b / 2.0) * std::exp(-b / 2.0);
    }
    sup_ = bound;
    // r^{|m|} exp(-r^2/sigma^2) <= 1e-30 * sup / |A|
    const double target = 1e-30 * (sup_ > 0 ? sup_ / std::abs(amp_) : 1.0);
    double r = sigma_;
    while (std::pow(r, mono_.order()) * std::exp(-r * r / (sigma_ * sigma_)) > target) r *= 1.02;
    effective_ = norm(center_) + r;
  }

  int dim() const override { return dim_; }
  int max_derivative_order() const override { return order_; }
  double support_radius() const override { return std::numeric_limits<double>::infinity(); }
  double effective_radius() const override { return effective_; }
  double sup_bound() const override { return sup_; }

  double value(const Point& x) const override {
    double r2 = 0.0;
    double m = amp_;
    for (int i = 0; i < dim_; ++i) {
      const double t = x[i] - center_[i];
      r2 += t * t;
      for (int e = 0; e < mono_.c[i]; ++e) m *= t;
    }
    return m * std::exp(-r2 / (sigma_ * sigma_));
  }

  double derivative(const Point& x, const MultiIndex& alpha) const override {
    double r = amp_;
    for (int i = 0; i < dim_; ++i) {
      const int a = alpha.c[i];
      const double t0 = x[i] - center_[i];
      Jet t = Jet::variable(a, t0);
      Jet g = pow_int(t, mono_.c[i]) * exp(-(t * t) * (1.0 / (sigma_ * sigma_)));
      r *= g.derivative(a);
    }
    return r;
  }

 private:
  int dim_;
  double sigma_;
  MultiIndex mono_;
  double amp_;
  Point center_;
  int order_;
  double sup_ = 1.0;
  double effective_ = 0.0;
};

// Smooth step: 1 on |t| <= L/2, 0 on |t| >= 3L/4.
Jet window_jet(double t, double L, int order) {
  const double a = std::abs(t);
  if (a <= 0.5 * L) return Jet(order, 1.0);
  if (a >= 0.75 * L) return Jet(order, 0.0);
  const double sign = t >= 0 ? 1.0 : -1.0;
  Jet s(order, (0.75 * L - a) / (0.25 * L));
  if (order >= 1) s[1] = -sign * 4.0 / L;
  auto phi = [order](const Jet& u) {
    // exp(-1/u) and all its derivatives are below 1e-50 once u < 0.005
    if (u[0] < 0.005) return Jet(order, 0.0);
    return exp(-reciprocal(u));
  };
  Jet one_minus_s = -s + 1.0;
  Jet p = phi(s);
  Jet q = phi(one_minus_s);
  if (p[0] == 0.0) return Jet(order, 0.0);
  if (q[0] == 0.0) return Jet(order, 1.0);
  return p / (p + q);
}

// A sin(omega . x + phi) prod_i w(x_i)
class WindowedSinusoidModel final : public FieldModel {
 public:
  WindowedSinusoidModel(int dim, Point omega, double phase, double amp, double window, int order)
      : dim_(dim), omega_(omega), phase_(phase), amp_(amp), window_(window), order_(order) {}

  int dim() const override { return dim_; }
  int max_derivative_order() const override { return order_; }
  double support_radius() const override { return 0.75 * window_ * std::sqrt(double(dim_)); }
  double sup_bound() const override { return std::abs(amp_); }

  double value(const Point& x) const override {
    double w = 1.0;
    for (int i = 0; i < dim_; ++i) {
      w *= window_jet(x[i], window_, 0)[0];
      if (w == 0.0) return 0.0;
    }
    return amp_ * std::sin(dot(omega_, x) + phase_) * w;
  }

  double derivative(const Point& x, const MultiIndex& alpha) const override {
    std::array<Jet, kMaxDim> w{Jet(0), Jet(0), Jet(0)};
    for (int i = 0; i < dim_; ++i) {
      w[i] = window_jet(x[i], window_, alpha.c[i]);
      bool zero = true;
      for (int m = 0; m <= alpha.c[i]; ++m) zero = zero && w[i][m] == 0.0;
      if (zero) return 0.0;
    }
    const double arg = dot(omega_, x) + phase_;
    double total = 0.0;
    // Leibniz over beta <= alpha; derivatives of the sinusoid are closed form.
    const int b0max = alpha.c[0];
    const int b1max = dim_ > 1 ? alpha.c[1] : 0;
    const int b2max = dim_ > 2 ? alpha.c[2] : 0;
    for (int b0 = 0; b0 <= b0max; ++b0)
      for (int b1 = 0; b1 <= b1max; ++b1)
        for (int b2 = 0; b2 <= b2max; ++b2) {
          const std::array<int, 3> beta{b0, b1, b2};
          double term = std::sin(arg + (b0 + b1 + b2) * std::numbers::pi / 2.0);
          for (int i = 0; i < dim_; ++i) {
            const int a = alpha.c[i];
            const int b = beta[i];
            term *= factorial(a) / (factorial(b) * factorial(a - b));
            term *= std::pow(omega_[i], b);
            term *= w[i].derivative(a - b);
          }
          total += term;
        }
    return amp_ * total;
  }

 private:
  int dim_;
  Point omega_;
  double phase_;
  double amp_;
  double window_;
  int order_;
};

// Radial profile of eta_2 * 1_{B(0,1)} tabulated on [1/2, 3/2].
class MollifiedProfile {
 public:
  static constexpr int kIntervals = 1024;
  static constexpr int kAuxPerAxis = 512;

  explicit MollifiedProfile(int dim) : table_(kIntervals + 1) {
    const double h = 1.0 / kAuxPerAxis;  // aux grid over [-1/2, 1/2] (and [0, 1/2] radially)
    struct Node {
      double z1, s, w;  // axial coordinate, transverse radius, weight
    };
    std::vector<Node> nodes;
    auto eta = [](double r) { return r < 1.0 ? std::exp(-1.0 / (1.0 - r * r)) : 0.0; };
    if (dim == 1) {
      for (int i = 0; i < kAuxPerAxis; ++i) {
        const double z = -0.5 + (i + 0.5) * h;
        nodes.push_back({z, 0.0, eta(2.0 * std::abs(z))});
      }
    } else if (dim == 2) {
      for (int i = 0; i < kAuxPerAxis; ++i)
        for (int j = 0; j < kAuxPerAxis; ++j) {
          const double z1 = -0.5 + (i + 0.5) * h;
          const double z2 = -0.5 + (j + 0.5) * h;
          const double w = eta(2.0 * std::hypot(z1, z2));
          if (w > 0.0) nodes.push_back({z1, z2, w});
        }
    } else {
      // cylindrical reduction about the axis through the evaluation point
      for (int i = 0; i < kAuxPerAxis; ++i)
        for (int j = 0; j < kAuxPerAxis / 2; ++j) {
          const double z1 = -0.5 + (i + 0.5) * h;
          const double s = (j + 0.5) * h;
          const double w = eta(2.0 * std::hypot(z1, s)) * 2.0 * std::numbers::pi * s;
          if (w > 0.0) nodes.push_back({z1, s, w});
        }
    }
    double total = 0.0;
    for (const Node& n : nodes) total += n.w;
    for (Node& n : nodes) n.w /= total;

    for (int t = 0; t <= kIntervals; ++t) {
      const double rho = 0.5 + double(t) / kIntervals;
      double v = 0.0;
      for (const Node& n : nodes) {
        const double d = std::hypot(rho - n.z1, n.s);
        // fraction of the aux cell inside the unit ball, linear in the signed distance
        const double cover = std::clamp((1.0 - d) / h + 0.5, 0.0, 1.0);
        v += n.w * cover;
      }
      table_[t] = v;
    }
    table_.front() = 1.0;
    table_.back() = 0.0;
  }

  // profile value and first two radial derivatives
  std::array<double, 3> eval(double rho) const {
    if (rho <= 0.5) return {1.0, 0.0, 0.0};
    if (rho >= 1.5) return {0.0, 0.0, 0.0};
    const double u = (rho - 0.5) * kIntervals;
    int i = std::min(static_cast<int>(u), kIntervals - 1);
    const double t = u - i;
    auto at = [&](int j) {
      if (j < 0) return 1.0;
      if (j > kIntervals) return 0.0;
      return table_[j];
    };
    const double p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
    // Catmull-Rom
    const double a = -0.5 * p0 + 1.5 * p1 - 1.5 * p2 + 0.5 * p3;
    const double b = p0 - 2.5 * p1 + 2.0 * p2 - 0.5 * p3;
    const double c = -0.5 * p0 + 0.5 * p2;
    const double d = p1;
    const double scale = kIntervals;
    return {((a * t + b) * t + c) * t + d, ((3.0 * a * t + 2.0 * b) * t + c) * scale,
            (6.0 * a * t + 2.0 * b) * scale * scale};
  }

 private:
  std::vector<double> table_;
};

const MollifiedProfile& mollified_profile(int dim) {
  static std::once_flag flags[kMaxDim];
  static std::unique_ptr<MollifiedProfile> profiles[kMaxDim];
  std::call_once(flags[dim - 1], [dim] { profiles[dim - 1] = std::make_unique<MollifiedProfile>(dim); });
  return *profiles[dim - 1];
}

class MollifiedIndicatorModel final : public FieldModel {
 public:
  explicit MollifiedIndicatorModel(int dim) : dim_(dim), profile_(mollified_profile(dim)) {}

  int dim() const override { return dim_; }
  int max_derivative_order() const override { return 2; }
  double support_radius() const override { return 1.5; }
  double sup_bound() const override { return 1.0; }
  bool derivatives_exact() const override { return false; }

  double value(const Point& x) const override { return profile_.eval(norm(x))[0]; }

  double derivative(const Point& x, const MultiIndex& alpha) const override {
    const int order = alpha.order();
    if (order == 0) return value(x);
    if (order > 2) throw InvalidParameter("mollified_indicator provides derivatives up to order 2");
    const double rho = norm(x);
    if (rho <= 0.5 || rho >= 1.5) return 0.0;
    const auto g = profile_.eval(rho);
    int i = -1, j = -1;
    for (int a = 0; a < dim_; ++a)
      for (int m = 0; m < alpha.c[a]; ++m) (i < 0 ? i : j) = a;
    if (order == 1) return g[1] * x[i] / rho;
    const double delta = i == j ? 1.0 : 0.0;
    return g[2] * x[i] * x[j] / (rho * rho) +
           g[1] * (delta / rho - x[i] * x[j] / (rho * rho * rho));
  }

 private:
  int dim_;
  const MollifiedProfile& profile_;
};

class DilatedModel final : public FieldModel {
 public:
  DilatedModel(std::shared_ptr<const FieldModel> inner, double a) : inner_(std::move(inner)), a_(a) {
    catalog_id = inner_->catalog_id;
    params = inner_->params;
    params.set("dilation", a_ * params.get("dilation", 1.0));
  }
  int dim() const override { return inner_->dim(); }
  int max_derivative_order() const override { return inner_->max_derivative_order(); }
  double support_radius() const override { return inner_->support_radius() / a_; }
  double effective_radius() const override { return inner_->effective_radius() / a_; }
  double sup_bound() const override { return inner_->sup_bound(); }
  bool derivatives_exact() const override { return inner_->derivatives_exact(); }
  int polynomial_degree() const override { return inner_->polynomial_degree(); }
  double value(const Point& x) const override {
    return inner_->value({a_ * x[0], a_ * x[1], a_ * x[2]});
  }
  double derivative(const Point& x, const MultiIndex& alpha) const override {
    return std::pow(a_, alpha.order()) * inner_->derivative({a_ * x[0], a_ * x[1], a_ * x[2]}, alpha);
  }

 private:
  std::shared_ptr<const FieldModel> inner_;
  double a_;
};

int read_dim(const ParamRecord& p) {
  const double d = p.get("dim", 1.0);
  require(d == 1.0 || d == 2.0 || d == 3.0, "dim must be 1, 2, or 3");
  return static_cast<int>(d);
}

Point read_point(const ParamRecord& p, const std::string& key, int dim, double fallback) {
  Point out{};
  const auto v = p.list(key, std::vector<double>(dim, fallback));
  require(v.size() == static_cast<std::size_t>(dim) || v.size() == 1,
          "parameter '" + key + "' needs 1 or dim entries");
  for (int i = 0; i < dim; ++i) out[i] = v.size() == 1 ? v[0] : v[i];
  return out;
}

int read_order(const ParamRecord& p) {
  const double k = p.get("max_order", 8.0);
  require(k >= 0 && k <= 20 && k == std::floor(k), "max_order must be an integer in [0, 20]");
  return static_cast<int>(k);
}

}  // namespace

// ---------------------------------------------------------- AnalyticField

AnalyticField::AnalyticField(std::shared_ptr<const FieldModel> model) : model_(std::move(model)) {
  require(model_ != nullptr, "null field model");
}

int AnalyticField::dim() const { return model_->dim(); }
int AnalyticField::max_derivative_order() const { return model_->max_derivative_order(); }
double AnalyticField::support_radius() const { return model_->support_radius(); }
double AnalyticField::effective_radius() const { return model_->effective_radius(); }
double AnalyticField::sup_bound() const { return model_->sup_bound(); }
bool AnalyticField::derivatives_exact() const { return model_->derivatives_exact(); }
int AnalyticField::polynomial_degree() const { return model_->polynomial_degree(); }
bool AnalyticField::is_polynomial_of_degree_at_most(int d) const {
  const int deg = model_->polynomial_degree();
  return deg >= -1 && deg <= d;
}
const std::string& AnalyticField::catalog_id() const { return model_->catalog_id; }
const ParamRecord& AnalyticField::params() const { return model_->params; }
double AnalyticField::operator()(const Point& x) const { return model_->value(x); }

double AnalyticField::derivative(const Point& x, const MultiIndex& alpha) const {
  if (alpha.order() > model_->max_derivative_order())
    throw InvalidParameter("derivative order " + std::to_string(alpha.order()) +
                           " unavailable for " + model_->catalog_id);
  if (alpha.order() == 0) return model_->value(x);
  return model_->derivative(x, alpha);
}

AnalyticField AnalyticField::dilated(double a) const {
  require(a > 0.0 && std::isfinite(a), "dilation must be positive");
  if (a == 1.0) return *this;
  return AnalyticField(std::make_shared<DilatedModel>(model_, a));
}

AnalyticField make_catalog_function(const std::string& id, const ParamRecord& params) {
  const int dim = read_dim(params);
  std::shared_ptr<FieldModel> model;
  if (id == "polynomial") {
    const auto& coefs = params.list("coefficients");
    const auto& flat = params.list("exponents");
    require(flat.size() == coefs.size() * dim, "polynomial needs dim exponents per coefficient");
    std::vector<MultiIndex> exps(coefs.size());
    for (std::size_t t = 0; t < coefs.size(); ++t)
      for (int i = 0; i < dim; ++i) {
        const double e = flat[t * dim + i];
        require(e >= 0 && e == std::floor(e), "polynomial exponents must be non-negative integers");
        exps[t].c[i] = static_cast<int>(e);
      }
    model = std::make_shared<PolynomialModel>(dim, std::move(exps), coefs);
  } else if (id == "gaussian_bump") {
    const double sigma = params.get("sigma", 1.0);
    require(sigma > 0.0, "gaussian_bump: sigma must be positive");
    MultiIndex mono;
    const Point m = read_point(params, "monomial", dim, 0.0);
    for (int i = 0; i < dim; ++i) {
      require(m[i] >= 0 && m[i] == std::floor(m[i]) && m[i] <= 6,
              "gaussian_bump: monomial exponents must be integers in [0, 6]");
      mono.c[i] = static_cast<int>(m[i]);
    }
    model = std::make_shared<GaussianModel>(dim, sigma, mono, params.get("amplitude", 1.0),
                                            read_point(params, "center", dim, 0.0), read_order(params));
  } else if (id == "windowed_sinusoid") {
    const double window = params.get("window", 4.0);
    require(window > 0.0, "windowed_sinusoid: window must be positive");
    model = std::make_shared<WindowedSinusoidModel>(dim, read_point(params, "frequency", dim, 1.0),
                                                    params.get("phase", 0.0),
                                                    params.get("amplitude", 1.0), window,
                                                    read_order(params));
  } else if (id == "mollified_indicator") {
    model = std::make_shared<MollifiedIndicatorModel>(dim);
  } else {
    throw InvalidParameter("unknown catalog id '" + id + "'");
  }
  model->catalog_id = id;
  model->params = params;
  model->params.set("dilation", 1.0);
  AnalyticField f(std::move(model));
  const double a = params.get("dilation", 1.0);
  return f.dilated(a);
}

AnalyticField make_polynomial(int dim, const std::vector<MultiIndex>& exponents,
                              const std::vector<double>& coefficients) {
  ParamRecord p;
  p.set("dim", dim);
  std::vector<double> flat;
  for (const auto& e : exponents)
    for (int i = 0; i < dim; ++i) flat.push_back(e.c[i]);
  p.set("exponents", flat);
  p.set("coefficients", coefficients);
  return make_catalog_function("polynomial", p);
}

AnalyticField make_gaussian_bump(int dim, double sigma, MultiIndex mono, double amplitude) {
  ParamRecord p;
  p.set("dim", dim);
  p.set("sigma", sigma);
  p.set("amplitude", amplitude);
  p.set("monomial", std::vector<double>{double(mono.c[0]), double(mono.c[1]), double(mono.c[2])});
  p.set("monomial", std::vector<double>(mono.c.begin(), mono.c.begin() + dim));
  return make_catalog_function("gaussian_bump", p);
}

SampledField sample(const AnalyticField& f, const GridSpec& grid) {
  require(f.dim() == grid.dim, "sample: field and grid dimensions differ");
  return sample([&f](const Point& x) { return f(x); }, grid);
}

SampledField sample(const std::function<double(const Point&)>& f, const GridSpec& grid) {
  grid.validate();
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.center(i));
  return SampledField(grid, std::move(v));
}

}  // namespace bsvy
