#include "bsvy/calculus.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "bsvy/error.hpp"
#include "bsvy/quadrature.hpp"

namespace bsvy {

std::int64_t binomial(int k, int j) {
  if (k < 0 || k > 62) throw InvalidParameter("difference order must be in [0, 62]");
  if (j < 0 || j > k) return 0;
  // Pascal's triangle; C(62, 31) < 2^63
  static const auto table = [] {
    std::array<std::array<std::int64_t, 63>, 63> t{};
    for (int n = 0; n <= 62; ++n) {
      t[n][0] = t[n][n] = 1;
      for (int i = 1; i < n; ++i) t[n][i] = t[n - 1][i - 1] + t[n - 1][i];
    }
    return t;
  }();
  return table[k][j];
}

double forward_difference(const AnalyticField& f, const Point& x, const Point& h, int k) {
  require(k >= 1, "difference order must be positive");
  if (k > 62) throw InvalidParameter("difference order above 62 overflows the binomial coefficients");
  double s = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double c = static_cast<double>(binomial(k, j));
    const double v = f(axpy(j, h, x));
    s += ((k - j) % 2 == 0 ? c : -c) * v;
  }
  return s;
}

double symmetric_difference(const AnalyticField& f, const Point& x, const Point& y, int k) {
  require(k >= 1, "difference order must be positive");
  if (k > 62) throw InvalidParameter("difference order above 62 overflows the binomial coefficients");
  double s = 0.0;
  for (int j = 0; j <= k; ++j) {
    Point node{};
    for (int a = 0; a < kMaxDim; ++a) node[a] = ((k - j) * x[a] + j * y[a]) / k;
    const double c = static_cast<double>(binomial(k, j));
    s += ((k - j) % 2 == 0 ? c : -c) * f(node);
  }
  return s;
}

double gradient_magnitude(const AnalyticField& f, const Point& x, int k) {
  require(k >= 0, "gradient order must be non-negative");
  if (k == 0) return std::abs(f(x));
  double s = 0.0;
  for (const MultiIndex& a : multi_indices_of_order(f.dim(), k)) {
    const double d = f.derivative(x, a);
    s += d * d;
  }
  return std::sqrt(s);
}

std::string to_string(SymbolWeighting w) { return w == SymbolWeighting::plain ? "plain" : "multinomial"; }

SymbolWeighting parse_symbol_weighting(const std::string& s) {
  if (s == "plain") return SymbolWeighting::plain;
  if (s == "multinomial") return SymbolWeighting::multinomial;
  throw InvalidParameter("symbol weighting must be 'plain' or 'multinomial'");
}

double directional_symbol(const AnalyticField& f, const Point& x, const Point& xi, int k,
                          SymbolWeighting weighting) {
  require(std::abs(norm(xi) - 1.0) <= 1e-12, "direction must be a unit vector");
  require(k >= 1, "symbol order must be positive");
  double s = 0.0;
  const double kf = factorial(k);
  for (const MultiIndex& a : multi_indices_of_order(f.dim(), k)) {
    const double mono = monomial(xi, a, f.dim());
    if (mono == 0.0) continue;
    const double w = weighting == SymbolWeighting::multinomial ? kf / multi_factorial(a) : 1.0;
    s += w * f.derivative(x, a) * mono;
  }
  return s;
}

std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::plain: return "plain";
    case OracleVerdict::multinomial: return "multinomial";
    case OracleVerdict::both: return "both";
    case OracleVerdict::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::vector<double> default_oracle_radii() {
  std::vector<double> r;
  for (int i = 0; i < 8; ++i) r.push_back(0.1 * std::ldexp(1.0, -i));
  return r;
}

namespace {

// Least-squares slope of log(residual) on log(r) over the finest admissible radii; +inf if the
// residuals are at rounding level.
// noise[i] is the rounding floor of q[i]; residuals below it count as exact
double residual_slope(const std::vector<double>& r, const std::vector<double>& q, double target,
                      const std::vector<double>& noise) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double res = std::abs(q[i] - target);
    if (res > noise[i]) {
      lx.push_back(std::log(r[i]));
      ly.push_back(std::log(res));
    }
  }
  if (lx.size() < 3) return std::numeric_limits<double>::infinity();
  // asymptotic order: fit only the finest half, coarse radii carry O(r^2) curvature
  const std::size_t drop = lx.size() >= 6 ? lx.size() / 2 : 0;
  lx.erase(lx.begin(), lx.begin() + static_cast<std::ptrdiff_t>(drop));
  ly.erase(ly.begin(), ly.begin() + static_cast<std::ptrdiff_t>(drop));
  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

SymbolOracleResult limit_symbol_oracle(const AnalyticField& f, const Point& x, const Point& xi, int k,
                                       const std::vector<double>& rs) {
  require(rs.size() >= 6, "oracle needs at least 6 radii");
  const double ratio = rs[0] / rs[1];
  require(ratio > 1.0, "oracle radii must decrease");
  for (std::size_t i = 1; i + 1 < rs.size(); ++i)
    require(std::abs(rs[i] / rs[i + 1] / ratio - 1.0) < 1e-9, "oracle radii must be geometric");
  SymbolOracleResult out;
  out.r = rs;
  std::vector<double> noise;
  for (double r : rs) {
    out.quotient.push_back(std::abs(forward_difference(f, x, {r * xi[0], r * xi[1], r * xi[2]}, k)) /
                           std::pow(r, k));
    // cancellation in the difference: 2^k terms of size max |f(x + j r xi)|
    double fmax = 0.0;
    for (int j = 0; j <= k; ++j) fmax = std::max(fmax, std::abs(f(axpy(j * r, xi, x))));
    noise.push_back(64.0 * std::ldexp(fmax, k) * std::numeric_limits<double>::epsilon() / std::pow(r, k));
  }
  const std::size_t m = rs.size();
  out.limit = (ratio * out.quotient[m - 1] - out.quotient[m - 2]) / (ratio - 1.0);
  out.plain = std::abs(directional_symbol(f, x, xi, k, SymbolWeighting::plain));
  out.multinomial = std::abs(directional_symbol(f, x, xi, k, SymbolWeighting::multinomial));
  double scale = std::max({1.0, out.plain, out.multinomial});
  for (double v : out.quotient) scale = std::max(scale, v);
  for (double& v : noise) v = std::max(v, 1e-13 * scale);
  out.slope_plain = residual_slope(rs, out.quotient, out.plain, noise);
  out.slope_multinomial = residual_slope(rs, out.quotient, out.multinomial, noise);
  const bool p = out.slope_plain >= 0.5;
  const bool mu = out.slope_multinomial >= 0.5;
  out.verdict = p && mu ? OracleVerdict::both
                        : (p ? OracleVerdict::plain : (mu ? OracleVerdict::multinomial : OracleVerdict::indeterminate));
  return out;
}

double strong_seminorm(const AnalyticField& f, int k, double s, double q, double eps,
                       const SeminormQuadrature& quad) {
  require(k >= 1 && s > 0.0 && q > 0.0, "strong seminorm needs k >= 1, s > 0, q > 0");
  require(eps > 0.0, "epsilon must be positive");
  if (f.is_polynomial_of_degree_at_most(k - 1)) return 0.0;
  const double reff = f.effective_radius();
  require(std::isfinite(reff), "strong seminorm needs a compactly supported or rapidly decaying field");
  const double H = quad.h_max > 0.0 ? quad.h_max : reff;
  require(eps < H, "epsilon must be below the radial cutoff");
  const int n = f.dim();
  const int N = quad.points_per_axis > 0 ? quad.points_per_axis : (n == 1 ? 1024 : (n == 2 ? 128 : 32));
  const GridSpec grid{n, reff + H, N};
  const SphereRule sph = sphere_rule(n, quad.directions);
  const auto nodes = geometric_nodes(eps, H, quad.radial_per_decade);
  const double sq = s * q;
  // exact int_a^b r^{-sq-1} dr per cell, integrand sampled at the geometric midpoint
  std::vector<double> mid(nodes.size() - 1), wr(nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    mid[i] = std::sqrt(nodes[i] * nodes[i + 1]);
    wr[i] = (std::pow(nodes[i], -sq) - std::pow(nodes[i + 1], -sq)) / sq;
  }
  std::vector<double> inner(grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const Point x = grid.center(c);
    double total = 0.0;
    for (std::size_t d = 0; d < sph.dirs.size(); ++d) {
      const Point& xi = sph.dirs[d];
      double acc = 0.0;
      for (std::size_t i = 0; i < mid.size(); ++i) {
        const double r = mid[i];
        acc += std::pow(std::abs(forward_difference(f, x, {r * xi[0], r * xi[1], r * xi[2]}, k)), q) * wr[i];
      }
      total += sph.w[d] * acc;
    }
    inner[c] = total;
  }
  if (!quad.outer) {
    double sum = 0.0;
    for (double v : inner) sum += v;
    return std::pow(sum * grid.cell_volume(), 1.0 / q);
  }
  for (double& v : inner) v = std::pow(v, 1.0 / q);
  return space_norm(*quad.outer, SampledField(grid, std::move(inner)));
}

SplineKernel::SplineKernel(int k) : k_(k) { require(k >= 1 && k <= 20, "spline order must be in [1, 20]"); }

double SplineKernel::operator()(double t) const {
  if (t < 0.0 || t >= k_) return 0.0;
  if (k_ == 1) return 1.0;
  double s = 0.0;
  for (int j = 0; j <= k_ && j <= t; ++j) {
    const double c = static_cast<double>(binomial(k_, j));
    s += (j % 2 == 0 ? c : -c) * std::pow(t - j, k_ - 1);
  }
  return s / factorial(k_ - 1);
}

double spline_identity_residual(const AnalyticField& f, const Point& x, const Point& h, int k) {
  require(k >= 1 && k <= f.max_derivative_order(), "spline identity needs derivatives of order k");
  const SplineKernel M(k);
  const int panels_per_unit = std::max(1, 500 / k);
  const auto alphas = multi_indices_of_order(f.dim(), k);
  const double kf = factorial(k);
  double integral = 0.0;
  for (int u = 0; u < k; ++u) {
    const Rule1D g = composite_gauss(panels_per_unit, 2, u, u + 1);
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      const double t = g.x[i];
      const Point y = axpy(t, h, x);
      double sym = 0.0;
      for (const MultiIndex& a : alphas) {
        const double mono = monomial(h, a, f.dim());
        if (mono != 0.0) sym += kf / multi_factorial(a) * f.derivative(y, a) * mono;
      }
      integral += g.w[i] * M(t) * sym;
    }
  }
  return std::abs(forward_difference(f, x, h, k) - integral);
}

}  // namespace bsvy
