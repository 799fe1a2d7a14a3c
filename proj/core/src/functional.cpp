#include "bsvy/functional.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "bsvy/error.hpp"
#include "bsvy/quadrature.hpp"

namespace bsvy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// int_a^b r^{gamma-1} dr
double radial_measure(double a, double b, double gamma) {
  if (b <= a) return 0.0;
  if (a <= 0.0) return gamma > 0.0 ? std::pow(b, gamma) / gamma : kInf;
  return std::pow(a, gamma) * std::expm1(gamma * std::log(b / a)) / gamma;
}

/// Accumulates per-lambda radial measures of {rho > lambda}. A whole cell
/// counts for every lambda below min(rho) and is stored once in the bucket of
/// that cutoff; suffix sums recover the totals without cancellation, so lambdas
/// above every sample get exactly zero.
class Accumulator {
 public:
  Accumulator(const std::vector<double>& lambdas, double gamma)
      : lam_(lambdas), gamma_(gamma), bucket_(lambdas.size() + 1, 0.0), direct_(lambdas.size(), 0.0) {}

  void cell(double ra, double rb, double pa, double pb, double w) {
    const double lo = std::min(pa, pb), hi = std::max(pa, pb);
    const std::size_t jlo = index_of(lo), jhi = index_of(hi);
    if (jlo > 0) bucket_[jlo] += w * radial_measure(ra, rb, gamma_);
    for (std::size_t j = jlo; j < jhi; ++j) direct_[j] += w * partial(ra, rb, pa, pb, lam_[j]);
  }

  /// rho = p0 (r / r0)^e on (0, r0).
  void inner(double r0, double p0, double e, double w) {
    if (p0 <= 0.0) return;
    const std::size_t j0 = index_of(p0);  // lambda_j < p0 for j < j0
    if (std::abs(e) < 1e-12) {
      add_below(j0, w * radial_measure(0.0, r0, gamma_));
      return;
    }
    if (e > 0.0) {
      for (std::size_t j = 0; j < j0; ++j) direct_[j] += w * radial_measure(r0 * std::pow(lam_[j] / p0, 1.0 / e), r0, gamma_);
      return;
    }
    add_below(j0, w * radial_measure(0.0, r0, gamma_));
    for (std::size_t j = j0; j < lam_.size(); ++j)
      direct_[j] += w * radial_measure(0.0, r0 * std::pow(lam_[j] / p0, 1.0 / e), gamma_);
  }

  /// rho = fx / r^c on (r_end, inf).
  void tail(double r_end, double fx, double c, double w) {
    if (fx <= 0.0) return;
    if (c > 0.0) {
      for (std::size_t j = 0; j < lam_.size(); ++j) {
        const double rs = std::pow(fx / lam_[j], 1.0 / c);
        if (rs <= r_end) break;
        direct_[j] += w * radial_measure(r_end, rs, gamma_);
      }
      return;
    }
    if (c == 0.0) {
      add_below(index_of(fx), gamma_ < 0.0 ? -w * std::pow(r_end, gamma_) / gamma_ : kInf);
      return;
    }
    for (std::size_t j = 0; j < lam_.size(); ++j) {
      if (gamma_ > 0.0) {
        direct_[j] = kInf;
        continue;
      }
      const double lower = std::max(r_end, std::pow(lam_[j] / fx, 1.0 / c));
      direct_[j] += -w * std::pow(lower, gamma_) / gamma_;
    }
  }

  std::vector<double> result() const {
    std::vector<double> out(lam_.size());
    double run = 0.0;
    for (std::size_t j = lam_.size(); j-- > 0;) {
      run += bucket_[j + 1];
      out[j] = run + direct_[j];
    }
    return out;
  }

 private:
  std::size_t index_of(double v) const {
    return static_cast<std::size_t>(std::lower_bound(lam_.begin(), lam_.end(), v) - lam_.begin());
  }

  /// m for every lambda_j with j < b
  void add_below(std::size_t b, double m) {
    if (b == 0) return;
    if (std::isinf(m)) {
      for (std::size_t j = 0; j < b; ++j) direct_[j] = kInf;
      return;
    }
    bucket_[b] += m;
  }

  double partial(double ra, double rb, double pa, double pb, double lambda) const {
    double rs;
    if (pa > 0.0 && pb > 0.0) {
      const double t = std::log(lambda / pa) / std::log(pb / pa);
      rs = ra * std::pow(rb / ra, t);
    } else {
      rs = ra + (lambda - pa) / (pb - pa) * (rb - ra);
    }
    rs = std::clamp(rs, ra, rb);
    return pb > pa ? radial_measure(rs, rb, gamma_) : radial_measure(ra, rs, gamma_);
  }

  const std::vector<double>& lam_;
  double gamma_;
  std::vector<double> bucket_;
  std::vector<double> direct_;
};

double field_radius(const AnalyticField& f) {
  const double s = f.support_radius();
  return std::isfinite(s) ? s : f.effective_radius();
}

int default_directions(int dim, const FunctionalConfig& cfg) {
  if (cfg.hquad.directions > 0) return cfg.hquad.directions;
  return dim == 3 ? 512 : 64;
}

int default_per_decade(int dim, const FunctionalConfig& cfg) {
  if (cfg.hquad.radial_per_decade > 0) return cfg.hquad.radial_per_decade;
  return dim == 1 ? 64 : 32;
}

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  if (t == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(t);
  for (std::size_t b = 0; b < t; ++b)
    pool.emplace_back([&, b] {
      try {
        for (std::size_t i = b * n / t; i < (b + 1) * n / t; ++i) fn(i);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

bool gamma_valid(double p, double q, double gamma) {
  if (!(p >= 1.0) || !(q > 0.0) || gamma == 0.0 || !std::isfinite(gamma)) return false;
  if (p == 1.0) return gamma > 0.0 || gamma < -q;
  return true;
}

void LambdaGrid::validate() const {
  require(min > 0.0 && max > min && std::isfinite(max), "lambda grid needs 0 < min < max");
  require(per_decade >= 1, "lambda grid needs at least one point per decade");
}

std::vector<double> LambdaGrid::values() const {
  validate();
  const double decades = std::log10(max / min);
  const int n = std::max(1, static_cast<int>(std::lround(decades * per_decade)));
  std::vector<double> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = min * std::pow(10.0, decades * i / n);
  out.back() = max;
  return out;
}

void FunctionalConfig::validate(int dim) const {
  require(k >= 1 && k <= 62, "k must lie in [1, 62]");
  require(ell_value() >= 0 && ell_value() <= k, "ell must satisfy 0 <= ell <= k");
  require(q > 0.0 && std::isfinite(q), "q must be positive");
  require(gamma != 0.0 && std::isfinite(gamma), "gamma must be a nonzero real (Gamma_{p,q} excludes 0)");
  require(box_factor >= 1.0, "outer box must contain the support");
  require(points_per_axis == 0 || points_per_axis >= 8, "outer grid needs at least 8 points per axis");
  require(hquad.r_min_factor > 0.0 && hquad.r_min_factor < 1.0, "r_min factor must lie in (0, 1)");
  require(hquad.r_max >= 0.0, "r_max must be non-negative");
  require(hquad.window_nodes >= 8, "window_nodes must be at least 8");
  lambdas.validate();
  validate_space(space, dim);
}

int resolved_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BSVY_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> inner_integrals(const AnalyticField& f, const Point& x, const std::vector<double>& lambdas,
                                    const FunctionalConfig& cfg) {
  require(std::is_sorted(lambdas.begin(), lambdas.end()), "lambdas must be increasing");
  for (double l : lambdas) require(l > 0.0, "lambda must be positive");
  const int n = f.dim();
  const int k = cfg.k;
  if (lambdas.empty() || f.is_polynomial_of_degree_at_most(k - 1)) return std::vector<double>(lambdas.size(), 0.0);

  const double gamma = cfg.gamma;
  const double t = cfg.threshold_exponent();
  const double compact_radius = field_radius(f);
  const bool bounded_support = std::isfinite(compact_radius);
  if (!bounded_support) require(cfg.hquad.r_max > 0.0, "fields without finite support need an explicit r_max");
  const double R = bounded_support ? compact_radius : cfg.hquad.r_max;
  const double r_min = R * std::max(cfg.hquad.r_min_factor, std::pow(10.0, -10.0 / k));
  const int per_decade = default_per_decade(n, cfg);
  const double h_uniform = R / cfg.hquad.window_nodes;

  // beyond r_cut no lambda of the list can be exceeded: |Delta^k f| <= 2^k sup|f|
  double r_cut = kInf;
  const double sup = f.sup_bound();
  if (t > 0.0 && std::isfinite(sup)) r_cut = std::pow(std::ldexp(sup, k) / lambdas.front(), 1.0 / t);
  if (!bounded_support) r_cut = std::min(r_cut, cfg.hquad.r_max);

  const double xr = norm(x);
  const bool inside = !bounded_support || xr < R;
  const double fx = inside ? std::abs(f(x)) : 0.0;

  const SphereRule sph = sphere_rule(n, default_directions(n, cfg));
  Accumulator acc(lambdas, gamma);
  std::vector<double> nodes;
  auto rho = [&](double r, const Point& xi) {
    const Point h{r * xi[0], r * xi[1], r * xi[2]};
    return std::abs(forward_difference(f, x, h, k)) / std::pow(r, t);
  };
  auto sweep = [&](const Point& xi, double w) {
    double prev_r = nodes.front(), prev_p = rho(prev_r, xi);
    const double first_p = prev_p;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const double r = nodes[i], p = rho(r, xi);
      acc.cell(prev_r, r, prev_p, p, w);
      prev_r = r;
      prev_p = p;
    }
    return first_p;
  };

  for (std::size_t d = 0; d < sph.dirs.size(); ++d) {
    const Point& xi = sph.dirs[d];
    const double w = sph.w[d];
    if (inside) {
      double r_end = R;
      if (bounded_support) {
        const double xd = dot(x, xi);
        r_end = -xd + std::sqrt(std::max(0.0, xd * xd - xr * xr + R * R));
      }
      const bool has_tail = bounded_support && r_end <= r_cut;
      const double r_top = std::min(r_end, r_cut);
      const double r0 = std::min(r_min, r_top);
      nodes.clear();
      nodes.push_back(r0);
      for (int i = 1;; ++i) {
        const double r = r_min * std::pow(10.0, double(i) / per_decade);
        if (r >= r_top) break;
        nodes.push_back(r);
      }
      for (int i = 1;; ++i) {
        const double r = i * h_uniform;
        if (r >= r_top) break;
        if (r > r0) nodes.push_back(r);
      }
      if (r_top > r0) nodes.push_back(r_top);
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end(), [](double a, double b) { return b - a <= 1e-14 * b; }),
                  nodes.end());
      const double p0 = sweep(xi, w);
      acc.inner(r0, p0, k - t, w);
      if (has_tail) acc.tail(r_end, fx, t, w);
    } else {
      // outside the support Delta^k_{r xi} f(x) vanishes unless some x + j r xi is inside
      const double xd = dot(x, xi);
      const double disc = xd * xd - xr * xr + R * R;
      if (disc <= 0.0 || xd >= 0.0) continue;
      const double s_lo = -xd - std::sqrt(disc), s_hi = -xd + std::sqrt(disc);
      std::vector<std::pair<double, double>> windows;
      for (int j = 1; j <= k; ++j) windows.emplace_back(s_lo / j, s_hi / j);
      std::sort(windows.begin(), windows.end());
      std::vector<std::pair<double, double>> merged;
      for (const auto& wdw : windows) {
        if (!merged.empty() && wdw.first <= merged.back().second)
          merged.back().second = std::max(merged.back().second, wdw.second);
        else
          merged.push_back(wdw);
      }
      for (const auto& [a, b0] : merged) {
        if (a >= r_cut) break;
        const double b = std::min(b0, r_cut);
        const int m = std::max(8, static_cast<int>(std::ceil((b - a) / h_uniform)));
        nodes.clear();
        for (int i = 0; i <= m; ++i) nodes.push_back(a + (b - a) * i / m);
        sweep(xi, w);
      }
    }
  }
  return acc.result();
}

double inner_integral(const AnalyticField& f, const Point& x, double lambda, const FunctionalConfig& cfg) {
  return inner_integrals(f, x, {lambda}, cfg).front();
}

GridSpec outer_grid(const AnalyticField& f, const FunctionalConfig& cfg) {
  const double R = field_radius(f);
  require(std::isfinite(R), "the outer box needs a field with finite (effective) support");
  const int n = f.dim();
  const int N = cfg.points_per_axis > 0 ? cfg.points_per_axis : (n == 1 ? 4096 : (n == 2 ? 128 : 32));
  GridSpec g{n, cfg.box_factor * R, N};
  g.validate();
  return g;
}

LevelSetField level_set_field(const AnalyticField& f, const std::vector<double>& lambdas,
                              const FunctionalConfig& cfg) {
  cfg.validate(f.dim());
  LevelSetField out;
  out.lambdas = lambdas;
  if (f.is_polynomial_of_degree_at_most(cfg.k - 1) && !std::isfinite(field_radius(f))) {
    out.grid = GridSpec{f.dim(), 1.0, cfg.points_per_axis > 0 ? cfg.points_per_axis : 8};
    out.values.assign(lambdas.size(), std::vector<double>(out.grid.size(), 0.0));
    return out;
  }
  out.grid = outer_grid(f, cfg);
  const std::size_t N = out.grid.size();
  out.values.assign(lambdas.size(), std::vector<double>(N, 0.0));
  parallel_for(N, resolved_threads(cfg.threads), [&](std::size_t i) {
    const auto v = inner_integrals(f, out.grid.center(i), lambdas, cfg);
    for (std::size_t j = 0; j < v.size(); ++j) out.values[j][i] = v[j];
  });
  return out;
}

double functional_from_inner(const FunctionalConfig& cfg, double lambda, const GridSpec& grid,
                             const std::vector<double>& inner) {
  for (double v : inner)
    if (!std::isfinite(v)) return kInf;
  if (cfg.convexified) return lambda * std::pow(space_norm(cfg.space, SampledField(grid, inner)), 1.0 / cfg.q);
  std::vector<double> g(inner.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::pow(inner[i], 1.0 / cfg.q);
  return lambda * space_norm(cfg.space, SampledField(grid, std::move(g)));
}

std::vector<double> bsvy_curve(const AnalyticField& f, const std::vector<double>& lambdas,
                               const FunctionalConfig& cfg) {
  const LevelSetField ls = level_set_field(f, lambdas, cfg);
  std::vector<double> out(lambdas.size());
  for (std::size_t j = 0; j < lambdas.size(); ++j) out[j] = functional_from_inner(cfg, lambdas[j], ls.grid, ls.values[j]);
  return out;
}

double bsvy_value(const AnalyticField& f, double lambda, const FunctionalConfig& cfg) {
  require(lambda > 0.0, "lambda must be positive");
  return bsvy_curve(f, {lambda}, cfg).front();
}

double gradient_norm(const AnalyticField& f, int m, const FunctionalConfig& cfg) {
  if (f.is_polynomial_of_degree_at_most(m - 1)) return 0.0;
  const GridSpec grid = outer_grid(f, cfg);
  return space_norm(cfg.space, sample([&](const Point& x) { return gradient_magnitude(f, x, m); }, grid));
}

namespace {

bool flat_end(const std::vector<double>& v, bool at_end) {
  const std::size_t n = v.size();
  if (n < 4) return false;
  double lo = kInf, hi = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double x = at_end ? v[n - 1 - i] : v[i];
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return hi > 0.0 && (hi - lo) <= 5e-3 * hi;
}

}  // namespace

SupScanResult bsvy_sup(const AnalyticField& f, const FunctionalConfig& cfg) {
  cfg.validate(f.dim());
  SupScanResult out;
  LambdaGrid grid = cfg.lambdas;
  out.lambdas = grid.values();
  out.values = bsvy_curve(f, out.lambdas, cfg);
  for (;;) {
    const auto it = std::max_element(out.values.begin(), out.values.end());
    const std::size_t idx = static_cast<std::size_t>(it - out.values.begin());
    out.sup = *it;
    out.argmax_lambda = out.lambdas[idx];
    if (out.sup == 0.0 || !std::isfinite(out.sup)) break;
    const bool at_hi = idx + 1 == out.values.size(), at_lo = idx == 0;
    if (!at_hi && !at_lo) break;
    if (flat_end(out.values, at_hi)) {
      out.plateau = true;
      break;
    }
    if (out.widenings >= 4) {
      out.boundary_warning = true;
      break;
    }
    ++out.widenings;
    LambdaGrid extra = grid;
    if (at_hi) {
      extra.min = grid.max;
      extra.max = grid.max * 100.0;
      grid.max = extra.max;
    } else {
      extra.max = grid.min;
      extra.min = grid.min / 100.0;
      grid.min = extra.min;
    }
    std::vector<double> lam = extra.values();
    std::vector<double> val = bsvy_curve(f, lam, cfg);
    if (at_hi) {
      out.lambdas.insert(out.lambdas.end(), lam.begin() + 1, lam.end());
      out.values.insert(out.values.end(), val.begin() + 1, val.end());
    } else {
      out.lambdas.insert(out.lambdas.begin(), lam.begin(), lam.end() - 1);
      out.values.insert(out.values.begin(), val.begin(), val.end() - 1);
    }
  }
  if (out.boundary_warning && cfg.strict)
    throw BoundaryArgmax("sup over the lambda grid sits on an endpoint after widening");
  out.rhs = gradient_norm(f, cfg.ell_value(), cfg);
  out.ratio = out.rhs > 0.0 ? out.sup / out.rhs : (out.sup > 0.0 ? kInf : 0.0);
  return out;
}

double limit_prediction(const AnalyticField& f, const FunctionalConfig& cfg, SymbolWeighting weighting) {
  require(cfg.ell_value() == cfg.k && cfg.b_offset == 0.0, "the limiting identity needs ell = k and b = gamma / q");
  if (f.is_polynomial_of_degree_at_most(cfg.k - 1)) return 0.0;
  const int n = f.dim();
  const SphereRule sph = sphere_rule(n, n == 1 ? 2 : (n == 2 ? 256 : 2048));
  const GridSpec grid = outer_grid(f, cfg);
  const double q = cfg.q;
  const SampledField s = sample(
      [&](const Point& x) {
        double acc = 0.0;
        for (std::size_t d = 0; d < sph.dirs.size(); ++d)
          acc += sph.w[d] * std::pow(std::abs(directional_symbol(f, x, sph.dirs[d], cfg.k, weighting)), q);
        return cfg.convexified ? acc : std::pow(acc, 1.0 / q);
      },
      grid);
  const double norm_value = cfg.convexified ? std::pow(space_norm(cfg.space, s), 1.0 / q) : space_norm(cfg.space, s);
  return std::pow(std::abs(cfg.gamma), -1.0 / q) * norm_value;
}

LimitResult bsvy_limit(const AnalyticField& f, const FunctionalConfig& cfg, SymbolWeighting weighting) {
  cfg.validate(f.dim());
  LimitResult out;
  out.to_infinity = cfg.gamma > 0.0;
  const std::vector<double> all = cfg.lambdas.values();
  require(all.size() >= 6, "limit runs need at least six lambdas");
  std::vector<double> tail(all.end() - 6, all.end());
  if (!out.to_infinity) tail.assign(all.begin(), all.begin() + 6);
  const std::vector<double> values = bsvy_curve(f, tail, cfg);
  out.tail_lambdas = tail;
  out.tail_values = values;
  if (!out.to_infinity) {
    std::reverse(out.tail_lambdas.begin(), out.tail_lambdas.end());
    std::reverse(out.tail_values.begin(), out.tail_values.end());
  }
  const auto& v = out.tail_values;
  out.limit = (v[3] + v[4] + v[5]) / 3.0;
  const double scale = *std::max_element(v.begin(), v.end());
  bool up = true, down = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1] - 1e-3 * scale) up = false;
    if (v[i] > v[i - 1] + 1e-3 * scale) down = false;
  }
  out.monotone = up || down;
  out.predicted = limit_prediction(f, cfg, weighting);
  if (out.predicted > 0.0)
    out.rel_error = std::abs(out.limit - out.predicted) / out.predicted;
  else
    out.rel_error = out.limit == 0.0 ? 0.0 : kInf;
  return out;
}

}  // namespace bsvy
