#include "bsvy/polynomial.hpp"

#include <Eigen/Dense>

#include "bsvy/calculus.hpp"
#include "bsvy/error.hpp"

namespace bsvy {

Polynomial::Polynomial(int dim, int degree, Point center, double scale, std::vector<double> coefficients)
    : dim_(dim),
      degree_(degree),
      center_(center),
      scale_(scale),
      basis_(multi_indices_up_to(dim, degree)),
      coef_(std::move(coefficients)) {
  require(scale_ > 0.0, "polynomial frame scale must be positive");
  require(coef_.size() == basis_.size(), "polynomial coefficient count does not match its basis");
}

double Polynomial::operator()(const Point& x) const {
  Point u{};
  for (int a = 0; a < dim_; ++a) u[a] = (x[a] - center_[a]) / scale_;
  double s = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i) s += coef_[i] * monomial(u, basis_[i], dim_);
  return s;
}

double Polynomial::derivative(const Point& x, const MultiIndex& beta) const {
  Point u{};
  for (int a = 0; a < dim_; ++a) u[a] = (x[a] - center_[a]) / scale_;
  double s = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const MultiIndex& al = basis_[i];
    double term = coef_[i];
    for (int a = 0; a < dim_ && term != 0.0; ++a) {
      if (beta.c[a] > al.c[a]) {
        term = 0.0;
        break;
      }
      for (int j = 0; j < beta.c[a]; ++j) term *= al.c[a] - j;
      term *= std::pow(u[a], al.c[a] - beta.c[a]);
    }
    s += term;
  }
  return s / std::pow(scale_, beta.order());
}

double Polynomial::global_coefficient(const MultiIndex& alpha) const {
  // ((x - c)/s)^beta = prod_a sum_{g <= beta_a} C(beta_a, g) x_a^g (-c_a)^{beta_a - g} / s^{beta_a}
  double total = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const MultiIndex& be = basis_[i];
    double term = coef_[i];
    for (int a = 0; a < dim_ && term != 0.0; ++a) {
      if (alpha.c[a] > be.c[a]) {
        term = 0.0;
        break;
      }
      term *= static_cast<double>(binomial(be.c[a], alpha.c[a])) *
              std::pow(-center_[a], be.c[a] - alpha.c[a]) / std::pow(scale_, be.c[a]);
    }
    total += term;
  }
  return total;
}

namespace {

struct Frame {
  Point center;
  double scale;
};

Frame frame_of(const Region& omega) {
  return {region_center(omega), std::max(1e-300, 0.5 * region_size(omega))};
}

}  // namespace

Polynomial minimizing_polynomial(const ScalarFn& f, int dim, const Region& omega, int s, int resolution) {
  require(s >= 0, "polynomial degree must be non-negative");
  require(region_dim(omega) == dim, "region and field dimensions differ");
  require(resolution >= 2, "quadrature resolution must be at least 2");
  const Frame fr = frame_of(omega);
  const auto basis = multi_indices_up_to(dim, s);
  const NodeSet q = region_nodes(omega, resolution);
  const int m = static_cast<int>(basis.size());
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd b(m);
  for (std::size_t t = 0; t < q.x.size(); ++t) {
    Point u{};
    for (int a = 0; a < dim; ++a) u[a] = (q.x[t][a] - fr.center[a]) / fr.scale;
    for (int i = 0; i < m; ++i) b[i] = monomial(u, basis[i], dim);
    const double w = q.w[t];
    gram.noalias() += w * b * b.transpose();
    rhs += (w * f(q.x[t])) * b;
  }
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw NumericalFailure("singular moment system for the minimizing polynomial");
  const Eigen::VectorXd c = ldlt.solve(rhs);
  return Polynomial(dim, s, fr.center, fr.scale, std::vector<double>(c.data(), c.data() + m));
}

Polynomial minimizing_polynomial(const AnalyticField& f, const Region& omega, int s, int resolution) {
  return minimizing_polynomial([&f](const Point& x) { return f(x); }, f.dim(), omega, s, resolution);
}

double moment_residual(const ScalarFn& f, const Polynomial& p, const Region& omega, int resolution) {
  const NodeSet q = region_nodes(omega, resolution);
  double worst = 0.0;
  for (const MultiIndex& al : p.basis()) {
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < q.x.size(); ++t) {
      Point u{};
      for (int a = 0; a < p.dim(); ++a) u[a] = (q.x[t][a] - p.center()[a]) / p.scale();
      const double b = monomial(u, al, p.dim());
      const double fx = f(q.x[t]);
      num += q.w[t] * (fx - p(q.x[t])) * b;
      den += q.w[t] * std::abs(fx * b);
    }
    if (den > 0.0) worst = std::max(worst, std::abs(num) / den);
  }
  return worst;
}

double local_approximation(const ScalarFn& f, int dim, const Region& omega, int k, int resolution) {
  require(k >= 1, "local approximation order must be positive");
  const Polynomial p = minimizing_polynomial(f, dim, omega, k - 1, resolution);
  const NodeSet q = region_nodes(omega, resolution);
  double s = 0.0;
  for (std::size_t t = 0; t < q.x.size(); ++t) s += q.w[t] * std::abs(f(q.x[t]) - p(q.x[t]));
  return s;
}

double local_approximation(const AnalyticField& f, const Region& omega, int k, int resolution) {
  return local_approximation([&f](const Point& x) { return f(x); }, f.dim(), omega, k, resolution);
}

CheckedApproximation local_approximation_checked(const AnalyticField& f, const Region& omega, int k,
                                                 int resolution) {
  CheckedApproximation out;
  out.value = local_approximation(f, omega, k, resolution);
  out.doubled = local_approximation(f, omega, k, 2 * resolution);
  const double scale = std::max(std::abs(out.value), std::abs(out.doubled));
  out.flagged = scale > 0.0 && std::abs(out.value - out.doubled) > 0.01 * scale;
  return out;
}

}  // namespace bsvy
