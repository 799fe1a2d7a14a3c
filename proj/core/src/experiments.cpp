#include "bsvy/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsvy/dyadic.hpp"
#include "bsvy/error.hpp"
#include "bsvy/quadrature.hpp"

namespace bsvy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

double sup_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

}  // namespace

std::string to_string(GnMode m) {
  switch (m) {
    case GnMode::interpolation_ss: return "interpolation-ss";
    case GnMode::endpoint_inf: return "endpoint-inf";
    case GnMode::two_parameter: return "two-parameter";
  }
  return "";
}

GnMode parse_gn_mode(const std::string& s) {
  if (s == "interpolation-ss") return GnMode::interpolation_ss;
  if (s == "endpoint-inf") return GnMode::endpoint_inf;
  if (s == "two-parameter") return GnMode::two_parameter;
  throw InvalidParameter("unknown Gagliardo-Nirenberg mode: " + s);
}

void GnParams::validate() const {
  switch (mode) {
    case GnMode::interpolation_ss:
      require(s > 0.0 && s < 1.0, "s must lie in (0, 1)");
      require(std::isfinite(q0) && q0 >= 1.0, "interpolation-ss needs a finite q0 >= 1");
      require(q >= 1.0 && q <= q0 * (1.0 + 1e-12), "q must lie in [1, q0]");
      require(close(1.0 / q, (1.0 - s) / q0 + s), "exponent relation 1/q = (1-s)/q0 + s fails");
      break;
    case GnMode::endpoint_inf:
      require(s > 0.0 && s < 1.0, "s must lie in (0, 1)");
      require(std::isinf(q0) && q0 > 0.0, "endpoint-inf needs q0 = inf");
      require(close(1.0 / q, s), "exponent relation 1/q = s fails");
      break;
    case GnMode::two_parameter:
      require(eta > 0.0 && eta < 1.0, "eta must lie in (0, 1)");
      require(s0 >= 0.0 && s0 < s && s < 1.0 && 1.0 < q && q < q0 && std::isfinite(q0),
              "two-parameter mode needs 0 <= s0 < s < 1 < q < q0 < inf");
      require(close(s, (1.0 - eta) * s0 + eta), "exponent relation s = (1-eta) s0 + eta fails");
      require(close(1.0 / q, (1.0 - eta) / q0 + eta), "exponent relation 1/q = (1-eta)/q0 + eta fails");
      break;
  }
}

GnReport gn_check(const AnalyticField& f, const FunctionalConfig& base, const GnParams& params) {
  params.validate();
  const double p = space_exponent(base.space);
  require(gamma_valid(p, 1.0, base.gamma), "gamma must lie in Gamma_{p,1}");
  const int k = base.k;
  GnReport out;

  FunctionalConfig lhs_cfg = base;
  lhs_cfg.ell = k;
  lhs_cfg.q = params.q;
  lhs_cfg.b_offset = params.s - 1.0;
  lhs_cfg.convexified = true;
  const std::vector<double> lam = lhs_cfg.lambdas.values();
  const std::vector<double> curve = bsvy_curve(f, lam, lhs_cfg);
  const auto it = std::max_element(curve.begin(), curve.end());
  out.lhs = *it;
  out.lhs_argmax = lam[static_cast<std::size_t>(it - curve.begin())];

  out.grad_k = gradient_norm(f, k, base);
  if (params.mode == GnMode::two_parameter) {
    FunctionalConfig inner_cfg = lhs_cfg;
    inner_cfg.q = params.q0;
    inner_cfg.b_offset = params.s0 - 1.0;
    out.inner_sup = sup_of(bsvy_curve(f, lam, inner_cfg));
    out.rhs = std::pow(out.inner_sup, 1.0 - params.eta) * std::pow(out.grad_k, params.eta);
  } else {
    const GridSpec grid = outer_grid(f, base);
    const SampledField g = sample([&](const Point& x) { return gradient_magnitude(f, x, k - 1); }, grid);
    if (params.mode == GnMode::endpoint_inf) {
      for (std::size_t i = 0; i < g.size(); ++i) out.grad_km1 = std::max(out.grad_km1, std::abs(g[i]));
    } else {
      out.grad_km1 = convexified_norm(base.space, params.q0, g);
    }
    out.rhs = std::pow(out.grad_km1, 1.0 - params.s) * std::pow(out.grad_k, params.s);
  }
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : (out.lhs > 0.0 ? kInf : 0.0);
  return out;
}

SharpnessReport sharpness_experiment(const SharpnessParams& params) {
  require(params.dim >= 2 && params.dim <= 3, "the sharpness witness needs dim 2 or 3");
  require(params.p >= 1.0 && params.q > 0.0 && params.lambda > 0.0, "invalid sharpness parameters");
  require(!params.radii.empty() && std::is_sorted(params.radii.begin(), params.radii.end()) && params.radii.front() > 2.0,
          "radii must be increasing and exceed the witness support");
  ParamRecord rec;
  rec.set("dim", params.dim);
  const AnalyticField f = make_catalog_function("mollified_indicator", rec);
  const int n = params.dim;

  FunctionalConfig cfg;
  cfg.k = params.k;
  cfg.ell = params.ell;
  cfg.q = params.q;
  cfg.gamma = std::isnan(params.gamma) ? -params.ell * params.q : params.gamma;
  cfg.hquad.directions = params.directions;
  cfg.space = Lebesgue{params.p};
  cfg.validate(n);

  // panels: uniform up to 2, then four per octave, with every requested radius a breakpoint
  std::vector<double> br{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
  for (double r = 2.0 * std::pow(2.0, 0.25); r < params.radii.back() * (1.0 - 1e-12); r *= std::pow(2.0, 0.25))
    br.push_back(r);
  for (double r : params.radii) br.push_back(r);
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end(), [](double a, double b) { return b - a < 1e-9 * b; }), br.end());

  const Rule1D g4 = gauss_legendre(4);
  const double pq = params.p / params.q;
  const double area = sphere_area(n);
  std::vector<double> cumulative(br.size(), 0.0);
  const std::vector<double> lam{params.lambda};
  for (std::size_t i = 1; i < br.size(); ++i) {
    const double a = br[i - 1], b = br[i];
    double s = 0.0;
    for (std::size_t m = 0; m < g4.x.size(); ++m) {
      const double r = 0.5 * (a + b) + 0.5 * (b - a) * g4.x[m];
      const double I = inner_integrals(f, Point{r, 0.0, 0.0}, lam, cfg).front();
      s += 0.5 * (b - a) * g4.w[m] * std::pow(I, pq) * std::pow(r, n - 1);
    }
    cumulative[i] = cumulative[i - 1] + area * s;
  }

  SharpnessReport out;
  for (double R : params.radii) {
    const auto it = std::min_element(br.begin(), br.end(), [R](double x, double y) { return std::abs(x - R) < std::abs(y - R); });
    out.rows.push_back({R, cumulative[static_cast<std::size_t>(it - br.begin())]});
  }
  for (std::size_t i = 1; i < out.rows.size(); ++i)
    if (out.rows[i].value < out.rows[i - 1].value) out.monotone = false;
  out.growth = out.rows.front().value > 0.0 ? out.rows.back().value / out.rows.front().value : kInf;
  out.excess = n * (1.0 / params.p - 1.0 / params.q) - params.ell;
  return out;
}

DefectReport defect_experiment(const AnalyticField& f, int k, double q, const std::vector<double>& eps_list,
                               const SeminormQuadrature& quad) {
  require(eps_list.size() >= 3, "the defect fit needs at least three eps values");
  DefectReport out;
  out.eps = eps_list;
  out.polynomial = f.is_polynomial_of_degree_at_most(k - 1);
  for (double e : eps_list) out.values.push_back(std::pow(strong_seminorm(f, k, k, q, e, quad), q));
  if (out.polynomial) {
    out.pass = std::all_of(out.values.begin(), out.values.end(), [](double v) { return v == 0.0; });
    return out;
  }
  const std::size_t m = eps_list.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(1.0 / eps_list[i]), y = out.values[i];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double mx = sx / m, my = sy / m;
  const double vxx = sxx / m - mx * mx, vxy = sxy / m - mx * my;
  out.slope = vxy / vxx;
  out.intercept = my - out.slope * mx;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(1.0 / eps_list[i]);
    ss_res += std::pow(out.values[i] - (out.intercept + out.slope * x), 2);
    ss_tot += std::pow(out.values[i] - my, 2);
  }
  out.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
  out.pass = out.slope > 0.0 && out.r2 > 0.99;
  return out;
}

WeightedUpperReport weighted_upper_check(const AnalyticField& f, const WeightSpec& w, double p,
                                         const FunctionalConfig& cfg) {
  const int n = f.dim();
  w.validate();
  require(w.dim == n, "weight and field dimensions differ");
  require(p >= 1.0, "p must be at least 1");
  require(gamma_valid(p, cfg.q, cfg.gamma), "gamma must lie in Gamma_{p,q}");
  require(n * (1.0 / p - 1.0 / cfg.q) < cfg.ell_value(), "the weighted upper bound needs n(1/p - 1/q) < ell");
  WeightedUpperReport out;
  out.a1_estimate = ap_constant(w, 1.0, default_family(w));
  require(std::isfinite(out.a1_estimate), "the weight is not in A_1 on the test family");

  FunctionalConfig c = cfg;
  c.space = Lebesgue{p};
  out.lambdas = c.lambdas.values();
  const LevelSetField ls = level_set_field(f, out.lambdas, c);
  std::vector<double> mass(ls.grid.size());
  const double h = ls.grid.cell_width();
  for (std::size_t i = 0; i < mass.size(); ++i) {
    Point corner = ls.grid.center(i);
    for (int a = 0; a < n; ++a) corner[a] -= 0.5 * h;
    mass[i] = cube_mass(w, Cube{n, corner, h});
  }
  for (std::size_t j = 0; j < out.lambdas.size(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < mass.size(); ++i) {
      const double I = ls.values[j][i];
      if (I > 0.0) s += std::pow(I, p / c.q) * mass[i];
    }
    out.values.push_back(std::pow(out.lambdas[j], p) * s);
  }
  out.sup = sup_of(out.values);
  out.rhs = weighted_gradient_integral(f, c.ell_value(), p, w);
  out.ratio = out.rhs > 0.0 ? out.sup / out.rhs : (out.sup > 0.0 ? kInf : 0.0);
  return out;
}

}  // namespace bsvy
